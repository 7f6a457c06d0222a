//! Brute-force reference implementations.
//!
//! Nothing here calls the closed formulas or the structured algorithms it is
//! used to check. Every routine is exponential in some parameter and guarded
//! by [`OracleLimits`].

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ideal::FtVector;
use crate::monomial::{Monomial, MonomialSet, TSpreadIter};

/// Environment variable raising or lowering every `n` cap.
pub const MAX_N_VAR: &str = "TSPREAD_MAX_N";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Cap on `n` for enumerating strongly stable sets of one degree.
    pub max_set_n: u32,
    /// Cap on `n` for the f_t-vector universe.
    pub max_universe_n: u32,
    /// Cap on the number of sets or vectors produced by one call.
    pub max_family: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_set_n: 10,
            max_universe_n: 6,
            max_family: 1_000_000,
        }
    }
}

impl OracleLimits {
    /// Defaults, with both `n` caps replaced by `TSPREAD_MAX_N` when set.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(n) = std::env::var(MAX_N_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.max_set_n = n;
            limits.max_universe_n = n;
        }
        limits
    }
}

fn universe(n: u32, d: u32, t: u32) -> Result<Vec<Monomial>> {
    if t == 0 {
        return Err(Error::ZeroSpread(t));
    }
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter(format!(
            "n and d must be positive (n = {n}, d = {d})"
        )));
    }
    Ok(TSpreadIter::new(n, d, t).collect())
}

/// `shad_tau(L)` by trying every variable against every member.
pub fn brute_shadow(set: &MonomialSet, tau: u32) -> Result<MonomialSet> {
    if tau == 0 {
        return Err(Error::ZeroSpread(tau));
    }
    if tau > set.spread() {
        return Err(Error::TauExceedsSpread {
            tau,
            t: set.spread(),
        });
    }
    let mut out = BTreeSet::new();
    for v in set {
        for i in 1..=set.n() {
            if let Some(w) = v.times_var(i) {
                if w.is_t_spread(tau) {
                    out.insert(w);
                }
            }
        }
    }
    MonomialSet::new(set.n(), set.degree() + 1, tau, out)
}

/// `|{v in M_{n,d,t} : v <_lex u}|` by scanning all of `M_{n,d,t}`.
pub fn brute_complement_count(u: &Monomial, n: u32, t: u32) -> Result<BigUint> {
    u.validate(n, t)?;
    let mut count = 0u64;
    for v in TSpreadIter::new(n, u.degree() as u32, t) {
        if v.lex_cmp(u)?.is_lt() {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Every t-spread strongly stable subset of `M_{n,d,t}`, including the empty
/// set and all of `M_{n,d,t}`.
///
/// Members are decided in descending lex order; a monomial may join only if
/// every exchange `x_i (u / x_j)` with `i < j` is already present, and those
/// exchanges are all lex-larger.
pub fn enumerate_strongly_stable_sets(
    n: u32,
    d: u32,
    t: u32,
    limits: &OracleLimits,
) -> Result<Vec<MonomialSet>> {
    if n > limits.max_set_n {
        return Err(Error::SizeGuard(format!(
            "strongly stable set enumeration needs n <= {} (set {MAX_N_VAR} to change), got n = {n}",
            limits.max_set_n
        )));
    }
    let members = universe(n, d, t)?;
    let preds = exchange_predecessors(&members, t);
    let mut out = Vec::new();
    let mut chosen = vec![false; members.len()];
    let mut stack: Vec<usize> = Vec::new();
    backtrack(
        0,
        &members,
        &preds,
        &mut chosen,
        &mut stack,
        limits,
        &mut |sel| {
            let set = sel.iter().map(|&k| members[k].clone()).collect::<Vec<_>>();
            out.push(MonomialSet::new(n, d, t, set).expect("members are valid"));
        },
    )?;
    Ok(out)
}

/// For each member, positions of its t-spread exchanges `x_i (u / x_j)`, `i < j`.
fn exchange_predecessors(members: &[Monomial], t: u32) -> Vec<Vec<usize>> {
    let position: HashMap<&Monomial, usize> =
        members.iter().enumerate().map(|(k, u)| (u, k)).collect();
    members
        .iter()
        .map(|u| {
            let mut preds = Vec::new();
            for &j in u.indices() {
                for i in 1..j {
                    if let Some(w) = u.exchange(j, i) {
                        if w.is_t_spread(t) {
                            preds.push(position[&w]);
                        }
                    }
                }
            }
            preds
        })
        .collect()
}

fn backtrack(
    k: usize,
    members: &[Monomial],
    preds: &[Vec<usize>],
    chosen: &mut [bool],
    stack: &mut Vec<usize>,
    limits: &OracleLimits,
    emit: &mut dyn FnMut(&[usize]),
) -> Result<usize> {
    if k == members.len() {
        emit(stack);
        return Ok(1);
    }
    let mut produced = backtrack(k + 1, members, preds, chosen, stack, limits, emit)?;
    if preds[k].iter().all(|&p| chosen[p]) {
        chosen[k] = true;
        stack.push(k);
        produced += backtrack(k + 1, members, preds, chosen, stack, limits, emit)?;
        stack.pop();
        chosen[k] = false;
    }
    if produced > limits.max_family {
        return Err(Error::SizeGuard(format!(
            "more than {} strongly stable sets",
            limits.max_family
        )));
    }
    Ok(produced)
}

/// Fixed-width bitset over one `M_{n,d,t}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, k: usize) {
        self.0[k / 64] |= 1 << (k % 64);
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Every f_t-vector of a t-spread strongly stable ideal of `S = K[x_1..x_n]`
/// other than the unit ideal, by walking chains `I_1, I_2, ...` of strongly
/// stable sets (the graded parts) with `I_{d+1} ⊇ shad_t(I_d)`.
///
/// The result includes vectors with `f(1) < n` (ideals containing variables).
pub fn brute_kk_universe(n: u32, t: u32, limits: &OracleLimits) -> Result<Vec<FtVector>> {
    if n > limits.max_universe_n {
        return Err(Error::SizeGuard(format!(
            "f_t-vector universe needs n <= {} (set {MAX_N_VAR} to change), got n = {n}",
            limits.max_universe_n
        )));
    }
    let set_limits = OracleLimits {
        max_set_n: n.max(limits.max_set_n),
        ..*limits
    };
    let mut layers: Vec<(Vec<Bits>, Vec<Bits>)> = Vec::new();
    let mut d = 1;
    loop {
        let members = universe(n, d, t)?;
        if members.is_empty() {
            break;
        }
        let next: Vec<Monomial> = TSpreadIter::new(n, d + 1, t).collect();
        let next_pos: HashMap<&Monomial, usize> =
            next.iter().enumerate().map(|(k, u)| (u, k)).collect();
        let mut sets = Vec::new();
        let mut shadows = Vec::new();
        for set in enumerate_strongly_stable_sets(n, d, t, &set_limits)? {
            let mut bits = Bits::new(members.len());
            let mut k = 0;
            for u in &set {
                while &members[k] != u {
                    k += 1;
                }
                bits.set(k);
            }
            let mut shadow_bits = Bits::new(next.len());
            for w in brute_shadow(&set, t)?.iter() {
                shadow_bits.set(next_pos[w]);
            }
            sets.push(bits);
            shadows.push(shadow_bits);
        }
        layers.push((sets, shadows));
        d += 1;
    }

    // tails[s] holds the vectors (f(d), f(d+1), ...) reachable from set s of the layer.
    let mut tails: Vec<HashSet<Vec<u64>>> = Vec::new();
    for (depth, (sets, shadows)) in layers.iter().enumerate().rev() {
        let size = universe(n, depth as u32 + 1, t)?.len();
        let mut current = Vec::with_capacity(sets.len());
        for (s, shadow) in shadows.iter().enumerate() {
            let f_d = (size - sets[s].count()) as u64;
            let mut here = HashSet::new();
            if depth + 1 == layers.len() {
                here.insert(vec![f_d]);
            } else {
                for (s_next, bits_next) in layers[depth + 1].0.iter().enumerate() {
                    if shadow.is_subset(bits_next) {
                        for tail in &tails[s_next] {
                            let mut v = Vec::with_capacity(tail.len() + 1);
                            v.push(f_d);
                            v.extend_from_slice(tail);
                            here.insert(v);
                        }
                    }
                }
            }
            current.push(here);
        }
        tails = current;
        let total: usize = tails.iter().map(HashSet::len).sum();
        if total > limits.max_family {
            return Err(Error::SizeGuard(format!(
                "more than {} partial f_t-vectors",
                limits.max_family
            )));
        }
    }

    let mut out: BTreeSet<FtVector> = BTreeSet::new();
    for tail_set in &tails {
        for tail in tail_set {
            let mut v = vec![1u64];
            v.extend_from_slice(tail);
            out.insert(FtVector::from_u64s(&v));
        }
    }
    Ok(out.into_iter().collect())
}

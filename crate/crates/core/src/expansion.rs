//! Macaulay binomial expansions and the successor operators built on them.
//!
//! Every `a >= 1` has a unique expansion with respect to `d >= 1`
//!
//! ```text
//! a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_r, r),   a_d > a_{d-1} > ... > a_r >= r >= 1
//! ```
//!
//! obtained greedily. The classical operator replaces each `C(a_j, j)` by
//! `C(a_j, j+1)`; the t-spread operator additionally lowers every top by
//! `t - 1`. For a nonempty t-spread lex set `L` in `M_{n,d,t}` with
//! `a = |M_{n,d,t} \ L|`, the t-spread operator counts the degree `d+1`
//! t-spread monomials outside the shadow of `L`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::monomial::count_tspread;

/// The expansion of `a` with respect to `d`, as pairs `(a_j, j)` for
/// `j = d, d-1, ..., r`. Empty when `a = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayExpansion {
    a: BigUint,
    d: u32,
    terms: Vec<(u64, u32)>,
}

impl MacaulayExpansion {
    pub fn value(&self) -> &BigUint {
        &self.a
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &[(u64, u32)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest bottom index `r`, if any terms exist.
    pub fn lowest(&self) -> Option<u32> {
        self.terms.last().map(|&(_, j)| j)
    }

    /// Top `a_j` for bottom `j`, if present.
    pub fn top(&self, j: u32) -> Option<u64> {
        self.terms
            .iter()
            .find(|&&(_, b)| b == j)
            .map(|&(top, _)| top)
    }

    pub fn evaluate(&self) -> BigUint {
        self.terms
            .iter()
            .map(|&(top, j)| binomial(top as i64, j as i64))
            .sum()
    }
}

impl fmt::Display for MacaulayExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (top, j)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "C({top},{j})")?;
        }
        Ok(())
    }
}

/// Largest `m >= j` with `C(m, j) <= a`; requires `a >= 1`. Fails when
/// `m` would not fit in an `i64`.
fn largest_top(a: &BigUint, j: u32) -> Result<u64> {
    let j = j as i64;
    let fits = |m: i64| binomial(m, j) <= *a;
    let mut lo = j;
    let mut step = 1i64;
    loop {
        let probe = lo
            .checked_add(step)
            .filter(|p| p.checked_add(step).is_some())
            .ok_or_else(|| {
                Error::InvalidParameter(format!("{a} is too large to expand in degree {j}"))
            })?;
        if !fits(probe) {
            break;
        }
        lo = probe;
        step *= 2;
    }
    // C(lo, j) <= a < C(lo + step, j)
    let mut hi = lo + step;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo as u64)
}

/// Greedy Macaulay expansion of `a` with respect to `d`.
pub fn macaulay_expand(a: &BigUint, d: u32) -> Result<MacaulayExpansion> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "expansion degree must be positive".into(),
        ));
    }
    let mut rest = a.clone();
    let mut terms = Vec::new();
    let mut j = d;
    while !rest.is_zero() && j >= 1 {
        let top = largest_top(&rest, j)?;
        rest -= binomial(top as i64, j as i64);
        terms.push((top, j));
        j -= 1;
    }
    debug_assert!(rest.is_zero());
    Ok(MacaulayExpansion {
        a: a.clone(),
        d,
        terms,
    })
}

/// The classical operator `a^(d) = sum C(a_j, j+1)`; `0^(d) = 0`.
pub fn classic_successor(a: &BigUint, d: u32) -> Result<BigUint> {
    let expansion = macaulay_expand(a, d)?;
    Ok(expansion
        .terms
        .iter()
        .map(|&(top, j)| binomial(top as i64, j as i64 + 1))
        .sum())
}

fn check_domain(a: &BigUint, d: u32, t: u32, n: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroSpread(t));
    }
    let bound = count_tspread(n, d, t);
    if *a > bound {
        return Err(Error::ExceedsCount {
            a: a.clone(),
            n,
            d,
            t,
            bound,
        });
    }
    Ok(())
}

/// The t-spread operator `a^[d]_t = sum C(a_j - (t-1), j+1)` over the
/// expansion of `a`, defined for `0 <= a <= |M_{n,d,t}|`.
///
/// This equals `|M_{n,d+1,t}| - |shad_t(L)|` for the t-spread lex set `L`
/// with `|M_{n,d,t} \ L| = a`, including `L = ∅`, where it gives
/// `|M_{n,d+1,t}|`. For `t = 1` it is [`classic_successor`].
pub fn t_successor(a: &BigUint, d: u32, t: u32, n: u32) -> Result<BigUint> {
    check_domain(a, d, t, n)?;
    let expansion = macaulay_expand(a, d)?;
    let shift = t as i64 - 1;
    Ok(expansion
        .terms
        .iter()
        .map(|&(top, j)| binomial(top as i64 - shift, j as i64 + 1))
        .sum())
}

/// The operator in its case-split form: extend the expansion with
/// `a_{r-1} = r - 2`, `a_{d+1} = n - (d-1)(t-1)`, `a_{d+2} = a_{d+1} + t + 1`,
/// take the largest `k` in `[-1, d-r+1]` with `a_{d-k+1} - a_{d-k} >= t + 1`,
/// and sum the corresponding terms.
///
/// Agrees with [`t_successor`] for `t = 1` and on many `t >= 2` inputs, but
/// for `t >= 2` it can disagree with the true complement of the shadow (for
/// instance `n = 3, d = 1, t = 2, a = 1` gives 1 where the shadow of `{x1, x2}`
/// leaves 0 monomials uncovered). Kept for comparison; use [`t_successor`] for bounds.
pub fn t_successor_casewise(a: &BigUint, d: u32, t: u32, n: u32) -> Result<BigUint> {
    check_domain(a, d, t, n)?;
    if a.is_zero() {
        return Ok(BigUint::zero());
    }
    let expansion = macaulay_expand(a, d)?;
    let (d, t, n) = (d as i64, t as i64, n as i64);
    let r = expansion.lowest().expect("a >= 1 has terms") as i64;

    // tops[j] for j = r-1 ..= d+2, offset by r-1.
    let offset = r - 1;
    let mut tops = vec![0i64; (d + 2 - offset + 1) as usize];
    let mut set = |j: i64, v: i64| tops[(j - offset) as usize] = v;
    set(r - 1, r - 2);
    for &(top, j) in &expansion.terms {
        set(j as i64, top as i64);
    }
    let ceiling = n - (d - 1) * (t - 1);
    set(d + 1, ceiling);
    set(d + 2, ceiling + t + 1);
    let top = |j: i64| tops[(j - offset) as usize];

    let k = (-1..=d - r + 1)
        .rev()
        .find(|&k| top(d - k + 1) - top(d - k) > t)
        .expect("k = -1 always qualifies");
    if k == -1 {
        return Ok(binomial(n - d * (t - 1), d + 1));
    }
    let mut sum: BigUint = (d + 1 - k..=d)
        .map(|j| binomial(top(j) - (t - 1), j + 1))
        .sum();
    sum += binomial(top(d - k) - (2 * t - 1), d - k + 1);
    sum += (r..=d - k).map(|j| binomial(top(j), j)).sum::<BigUint>();
    Ok(sum)
}

/// Convenience for small arguments.
pub fn t_successor_u64(a: u64, d: u32, t: u32, n: u32) -> Result<BigUint> {
    t_successor(&BigUint::from(a), d, t, n)
}

//! t-spread monomial ideals, their f_t-vectors, and the t-spread lex ideal
//! with the same f_t-vector.
//!
//! An ideal is held by its minimal t-spread generators in a fixed ambient
//! ring `K[x_1, ..., x_n]`. Graded parts are only ever needed in their
//! t-spread form `[I_j]_t`, which is empty above `d_max = 1 + (n-1)/t`.
//!
//! File format:
//!
//! ```text
//! # comment
//! n=8 t=2
//! x1x3x5
//! 1,4,6      # index-list syntax is accepted too
//! ```

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lexset::{is_lex_set, is_strongly_stable_set, shadow, LexSegment};
use crate::monomial::{count_tspread, max_degree, Monomial, MonomialSet, TSpreadIter};

/// Removes every monomial divisible by another one in the collection.
/// Output is sorted by degree, then descending lex.
pub fn minimalize<I>(gens: I) -> Vec<Monomial>
where
    I: IntoIterator<Item = Monomial>,
{
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for u in all {
        if !kept.iter().any(|v| v.divides(&u)) {
            kept.push(u);
        }
    }
    kept
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSpreadIdeal {
    n: u32,
    t: u32,
    generators: Vec<Monomial>,
}

impl TSpreadIdeal {
    /// Validates the generators and reduces them to a minimal system.
    pub fn new<I>(n: u32, t: u32, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        if t == 0 {
            return Err(Error::ZeroSpread(t));
        }
        let generators: Vec<Monomial> = generators.into_iter().collect();
        for u in &generators {
            u.validate(n, t)?;
        }
        Ok(TSpreadIdeal {
            n,
            t,
            generators: minimalize(generators),
        })
    }

    pub fn zero(n: u32, t: u32) -> Result<Self> {
        Self::new(n, t, std::iter::empty())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn spread(&self) -> u32 {
        self.t
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn max_degree(&self) -> u32 {
        max_degree(self.n, self.t)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(u))
    }

    /// `[I_j]_t`: t-spread monomials of degree `j` lying in the ideal.
    pub fn graded_part(&self, j: u32) -> MonomialSet {
        let gens: Vec<&Monomial> = self
            .generators
            .iter()
            .filter(|g| g.degree() <= j as usize)
            .collect();
        if gens.is_empty() {
            return MonomialSet::empty(self.n, j, self.t);
        }
        let members = TSpreadIter::new(self.n, j, self.t)
            .filter(|u| gens.iter().any(|g| g.divides(u)))
            .collect();
        MonomialSet::from_sorted(self.n, j, self.t, members)
    }

    /// `f(0) = 1` and `f(j) = |M_{n,j,t}| - |[I_j]_t|` for `1 <= j <= d_max`.
    pub fn ft_vector(&self) -> FtVector {
        let mut entries = vec![BigUint::one()];
        for j in 1..=self.max_degree() {
            entries
                .push(count_tspread(self.n, j, self.t) - BigUint::from(self.graded_part(j).len()));
        }
        FtVector::new(entries)
    }

    pub fn is_strongly_stable(&self) -> bool {
        (1..=self.max_degree()).all(|j| is_strongly_stable_set(&self.graded_part(j)))
    }

    pub fn is_lex(&self) -> bool {
        (1..=self.max_degree()).all(|j| is_lex_set(&self.graded_part(j)))
    }

    /// Writes the ideal in the text file format.
    pub fn to_file_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for TSpreadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} t={}", self.n, self.t)?;
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Raw content of an ideal or set file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialFile {
    pub n: u32,
    pub t: u32,
    pub monomials: Vec<Monomial>,
}

pub fn parse_monomial_file(text: &str) -> Result<MonomialFile> {
    let mut header: Option<(u32, u32)> = None;
    let mut monomials = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if header.is_none() {
            header = Some(parse_header(line).map_err(|reason| Error::ParseFile {
                line: line_no,
                reason,
            })?);
            continue;
        }
        let u: Monomial = line.parse().map_err(|e: Error| Error::ParseFile {
            line: line_no,
            reason: e.to_string(),
        })?;
        monomials.push(u);
    }
    let (n, t) = header.ok_or(Error::ParseFile {
        line: 0,
        reason: "missing `n=<int> t=<int>` header".into(),
    })?;
    Ok(MonomialFile { n, t, monomials })
}

fn parse_header(line: &str) -> std::result::Result<(u32, u32), String> {
    let mut n = None;
    let mut t = None;
    for token in line.split_whitespace() {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| format!("expected `n=<int> t=<int>`, found {token:?}"))?;
        let value: u32 = value
            .parse()
            .map_err(|_| format!("{key} must be a nonnegative integer, found {value:?}"))?;
        match key {
            "n" if n.is_none() => n = Some(value),
            "t" if t.is_none() => t = Some(value),
            _ => return Err(format!("unexpected header field {key:?}")),
        }
    }
    match (n, t) {
        (Some(n), Some(t)) => Ok((n, t)),
        _ => Err("header needs both n and t".into()),
    }
}

impl FromStr for TSpreadIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let file = parse_monomial_file(s)?;
        TSpreadIdeal::new(file.n, file.t, file.monomials)
    }
}

/// Smallest t-spread strongly stable ideal containing `gens`: closes the
/// generators under t-spread-preserving exchanges `x_i (u / x_j)`, `i < j`.
pub fn strongly_stable_closure<I>(gens: I, n: u32, t: u32) -> Result<TSpreadIdeal>
where
    I: IntoIterator<Item = Monomial>,
{
    if t == 0 {
        return Err(Error::ZeroSpread(t));
    }
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    for g in gens {
        g.validate(n, t)?;
        if seen.insert(g.clone()) {
            queue.push_back(g);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &j in u.indices() {
            for i in 1..j {
                if let Some(w) = u.exchange(j, i) {
                    if w.is_t_spread(t) && seen.insert(w.clone()) {
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    TSpreadIdeal::new(n, t, seen)
}

/// A candidate or actual f_t-vector `f(0), f(1), ...`, zero-extended.
///
/// Equality, hashing and ordering ignore trailing zeros.
#[derive(Clone, Debug)]
pub struct FtVector {
    entries: Vec<BigUint>,
}

impl FtVector {
    pub fn new(entries: Vec<BigUint>) -> Self {
        FtVector { entries }
    }

    pub fn from_u64s(entries: &[u64]) -> Self {
        FtVector::new(entries.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// `f(d)`, zero beyond the stored entries.
    pub fn get(&self, d: usize) -> BigUint {
        self.entries.get(d).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn trimmed(&self) -> &[BigUint] {
        let keep = self
            .entries
            .iter()
            .rposition(|v| !v.is_zero())
            .map_or(0, |p| p + 1);
        &self.entries[..keep]
    }
}

impl PartialEq for FtVector {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for FtVector {}

impl Hash for FtVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for FtVector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FtVector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl fmt::Display for FtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for FtVector {
    type Err = Error;

    /// Comma-separated nonnegative integers, e.g. `1,12,50,20,15`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|p| {
                p.trim().parse::<BigUint>().map_err(|_| {
                    Error::InvalidParameter(format!("bad f-vector entry {:?} in {s:?}", p.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FtVector::new(entries))
    }
}

/// One degree of the lex-ideal construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlexDegree {
    pub degree: u32,
    /// `L_j`, the lex set with `|L_j| = |[I_j]_t|`.
    pub lex: LexSegment,
    /// `|shad_t(L_{j-1})|`, the part of `L_j` forced by lower degrees.
    pub shadow_size: BigUint,
    /// `L_j \ shad_t(L_{j-1})`: the new minimal generators in this degree.
    /// Left empty when the construction is obstructed.
    pub generators: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlexTrace {
    pub n: u32,
    pub t: u32,
    pub degrees: Vec<TlexDegree>,
    pub failure_degree: Option<u32>,
}

impl fmt::Display for TlexTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.degrees {
            write!(
                f,
                "degree {}: |L| = {}, |shad_t(L_prev)| = {}",
                step.degree,
                step.lex.size(),
                step.shadow_size
            )?;
            if !step.generators.is_empty() {
                let gens: Vec<String> = step.generators.iter().map(|g| g.to_string()).collect();
                write!(f, ", new generators: {}", gens.join(", "))?;
            }
            writeln!(f)?;
        }
        if let Some(d) = self.failure_degree {
            writeln!(f, "obstructed at degree {d}")?;
        }
        Ok(())
    }
}

/// `|shad_t(L_{degree-1})| > |[I_degree]_t|`: no t-spread lex ideal shares
/// the f_t-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub degree: u32,
    pub shadow_size: BigUint,
    pub part_size: BigUint,
    pub trace: TlexTrace,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no t-lex ideal: obstruction at degree {} (|shad_t(L_{})| = {} > {} = |[I_{}]_t|)",
            self.degree,
            self.degree - 1,
            self.shadow_size,
            self.part_size,
            self.degree
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TlexOutcome {
    Lex {
        ideal: TSpreadIdeal,
        trace: TlexTrace,
    },
    Obstructed(Obstruction),
}

impl TlexOutcome {
    pub fn ideal(&self) -> Option<&TSpreadIdeal> {
        match self {
            TlexOutcome::Lex { ideal, .. } => Some(ideal),
            TlexOutcome::Obstructed(_) => None,
        }
    }

    pub fn trace(&self) -> &TlexTrace {
        match self {
            TlexOutcome::Lex { trace, .. } => trace,
            TlexOutcome::Obstructed(o) => &o.trace,
        }
    }
}

/// Builds the t-spread lex ideal whose t-spread graded parts have the sizes
/// `sizes[j-1] = |L_j|`, `j = 1..=d_max`, or reports the first degree where
/// the shadow of `L_{j-1}` does not fit into `L_j`.
pub(crate) fn lex_ideal_from_sizes(n: u32, t: u32, sizes: &[BigUint]) -> Result<TlexOutcome> {
    let mut degrees: Vec<TlexDegree> = Vec::with_capacity(sizes.len());
    let mut failure: Option<(u32, BigUint, BigUint)> = None;
    for (k, size) in sizes.iter().enumerate() {
        let j = k as u32 + 1;
        let lex = LexSegment::new(n, j, t, size.clone())?;
        let shadow_size = match degrees.last() {
            Some(prev) => prev.lex.shadow().size().clone(),
            None => BigUint::zero(),
        };
        if failure.is_none() && shadow_size > *size {
            failure = Some((j, shadow_size.clone(), size.clone()));
        }
        degrees.push(TlexDegree {
            degree: j,
            lex,
            shadow_size,
            generators: Vec::new(),
        });
    }
    if let Some((degree, shadow_size, part_size)) = failure {
        return Ok(TlexOutcome::Obstructed(Obstruction {
            degree,
            shadow_size,
            part_size,
            trace: TlexTrace {
                n,
                t,
                degrees,
                failure_degree: Some(degree),
            },
        }));
    }

    let mut generators = Vec::new();
    let mut previous: Option<MonomialSet> = None;
    for step in &mut degrees {
        let current = step.lex.materialize()?;
        let forced = match &previous {
            Some(prev) => shadow(prev, t)?,
            None => MonomialSet::empty(n, step.degree, t),
        };
        debug_assert!(forced.is_subset(&current));
        step.generators = current
            .iter()
            .filter(|u| !forced.contains(u))
            .cloned()
            .collect();
        generators.extend(step.generators.iter().cloned());
        previous = Some(current);
    }
    let ideal = TSpreadIdeal::new(n, t, generators)?;
    Ok(TlexOutcome::Lex {
        ideal,
        trace: TlexTrace {
            n,
            t,
            degrees,
            failure_degree: None,
        },
    })
}

/// The t-spread lex ideal `I^tlex` with the same f_t-vector as `ideal`.
///
/// Always succeeds for strongly stable input. For other t-spread ideals the
/// construction may be obstructed; the obstruction records the degree.
pub fn tlex(ideal: &TSpreadIdeal) -> Result<TlexOutcome> {
    let sizes: Vec<BigUint> = (1..=ideal.max_degree())
        .map(|j| BigUint::from(ideal.graded_part(j).len()))
        .collect();
    lex_ideal_from_sizes(ideal.n, ideal.t, &sizes)
}

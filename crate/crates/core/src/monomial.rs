//! Square-free monomials as strictly increasing index sequences, and the
//! sets `M_{n,d,t}` of t-spread monomials of degree `d` in `n` variables.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::binomial::binomial;
use crate::error::{Error, Result};

/// A square-free monomial `x_{i_1} x_{i_2} ... x_{i_d}`, stored as its
/// 1-based variable indices `i_1 < i_2 < ... < i_d`.
///
/// The derived `Ord` compares index sequences. Within one degree, ascending
/// `Ord` order is *descending* lex order: `x1x3 < x1x4` as index sequences
/// while `x1x3 >_lex x1x4`. Use [`Monomial::lex_cmp`] for the monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::ParseMonomial {
                input: String::new(),
                reason: "a monomial needs at least one variable".into(),
            });
        }
        if indices[0] == 0 {
            return Err(Error::ParseMonomial {
                input: render(&indices),
                reason: "variable indices start at 1".into(),
            });
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::ParseMonomial {
                input: render(&indices),
                reason: "indices must be strictly increasing".into(),
            });
        }
        Ok(Monomial(indices))
    }

    pub fn from_indices(indices: &[u32]) -> Result<Self> {
        Self::new(indices.to_vec())
    }

    /// Caller guarantees strictly increasing, 1-based indices.
    pub(crate) fn from_sorted(indices: Vec<u32>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(indices.first().is_none_or(|&i| i >= 1));
        Monomial(indices)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Largest variable index, `m(u)`.
    pub fn max_index(&self) -> u32 {
        *self.0.last().expect("monomials have positive degree")
    }

    pub fn contains(&self, index: u32) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn is_t_spread(&self, t: u32) -> bool {
        self.0.windows(2).all(|w| w[1] - w[0] >= t)
    }

    /// Square-free divisibility: `self | other` iff the supports nest.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree() > other.degree() {
            return false;
        }
        let mut rest = other.0.iter();
        self.0.iter().all(|i| rest.any(|j| j == i))
    }

    /// Lex comparison of monomials of equal degree: at the first position
    /// where the index sequences differ, the smaller index is the larger
    /// monomial.
    pub fn lex_cmp(&self, other: &Monomial) -> Result<Ordering> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(other.0.cmp(&self.0))
    }

    /// `x_i * self`, or `None` when `x_i` already divides `self`.
    pub fn times_var(&self, index: u32) -> Option<Monomial> {
        match self.0.binary_search(&index) {
            Ok(_) => None,
            Err(pos) => {
                let mut out = Vec::with_capacity(self.0.len() + 1);
                out.extend_from_slice(&self.0[..pos]);
                out.push(index);
                out.extend_from_slice(&self.0[pos..]);
                Some(Monomial(out))
            }
        }
    }

    /// `x_i * (self / x_j)`; `None` if `x_j` does not divide `self` or `x_i`
    /// divides the quotient.
    pub fn exchange(&self, remove: u32, insert: u32) -> Option<Monomial> {
        let pos = self.0.binary_search(&remove).ok()?;
        let mut rest = self.0.clone();
        rest.remove(pos);
        match rest.binary_search(&insert) {
            Ok(_) => None,
            Err(at) => {
                rest.insert(at, insert);
                Some(Monomial(rest))
            }
        }
    }

    /// Checks t-spread and index bounds against an ambient `n`.
    pub fn validate(&self, n: u32, t: u32) -> Result<()> {
        if self.max_index() > n {
            return Err(Error::IndexOutOfRange {
                monomial: self.to_string(),
                n,
            });
        }
        if !self.is_t_spread(t) {
            return Err(Error::NotTSpread {
                monomial: self.to_string(),
                t,
            });
        }
        Ok(())
    }
}

fn render(indices: &[u32]) -> String {
    indices.iter().map(|i| format!("x{i}")).collect()
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.0))
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Accepts `x1x3x5` and `1,3,5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::ParseMonomial {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = if let Some(rest) = s.strip_prefix('x') {
            rest.split('x').collect()
        } else {
            s.split(',').map(str::trim).collect()
        };
        if parts.is_empty() || parts.iter().any(|p| p.is_empty()) {
            return Err(bad("expected x1x3x5 or 1,3,5"));
        }
        let indices = parts
            .iter()
            .map(|p| {
                p.parse::<u32>()
                    .map_err(|_| bad("indices must be positive integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        Monomial::new(indices).map_err(|e| match e {
            Error::ParseMonomial { reason, .. } => bad(&reason),
            other => other,
        })
    }
}

pub fn is_t_spread(u: &Monomial, t: u32) -> bool {
    u.is_t_spread(t)
}

pub fn lex_compare(u: &Monomial, v: &Monomial) -> Result<Ordering> {
    u.lex_cmp(v)
}

pub fn divides(u: &Monomial, v: &Monomial) -> bool {
    u.divides(v)
}

/// `|M_{n,d,t}| = C(n - (d-1)(t-1), d)`.
pub fn count_tspread(n: u32, d: u32, t: u32) -> BigUint {
    let (n, d, t) = (n as i64, d as i64, t as i64);
    binomial(n - (d - 1) * (t - 1), d)
}

/// Largest degree admitting a t-spread monomial in `n` variables.
pub fn max_degree(n: u32, t: u32) -> u32 {
    if n == 0 {
        0
    } else {
        1 + (n - 1) / t.max(1)
    }
}

pub(crate) fn check_params(n: u32, d: u32, t: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroSpread(t));
    }
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter(format!(
            "n and d must be positive (n = {n}, d = {d})"
        )));
    }
    Ok(())
}

/// Iterates `M_{n,d,t}` in descending lex order, starting from
/// `x_1 x_{1+t} ... x_{1+(d-1)t}`.
#[derive(Clone, Debug)]
pub struct TSpreadIter {
    n: u32,
    t: u32,
    current: Option<Vec<u32>>,
}

impl TSpreadIter {
    pub fn new(n: u32, d: u32, t: u32) -> Self {
        let t = t.max(1);
        let start: Vec<u32> = (0..d).map(|k| 1 + k * t).collect();
        let fits = d > 0 && start.last().is_some_and(|&last| last <= n);
        TSpreadIter {
            n,
            t,
            current: fits.then_some(start),
        }
    }
}

impl Iterator for TSpreadIter {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let current = self.current.as_mut()?;
        let out = Monomial::from_sorted(current.clone());
        let d = current.len();
        // Rightmost position that can still move right; reset the tail tightly.
        let movable = (0..d).rev().find(|&p| {
            let ceiling = self.n - (d - 1 - p) as u32 * self.t;
            current[p] < ceiling
        });
        match movable {
            Some(p) => {
                current[p] += 1;
                for q in p + 1..d {
                    current[q] = current[q - 1] + self.t;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// All of `M_{n,d,t}` as a canonical set.
pub fn enumerate_tspread(n: u32, d: u32, t: u32) -> Result<MonomialSet> {
    check_params(n, d, t)?;
    Ok(MonomialSet::from_sorted(
        n,
        d,
        t,
        TSpreadIter::new(n, d, t).collect(),
    ))
}

/// A duplicate-free collection of t-spread monomials of a common degree,
/// kept in descending lex order (largest first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialSet {
    n: u32,
    d: u32,
    t: u32,
    members: Vec<Monomial>,
}

impl MonomialSet {
    pub fn new<I>(n: u32, d: u32, t: u32, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        if t == 0 {
            return Err(Error::ZeroSpread(t));
        }
        let mut members: Vec<Monomial> = members.into_iter().collect();
        for u in &members {
            if u.degree() != d as usize {
                return Err(Error::DegreeMismatch {
                    expected: d as usize,
                    found: u.degree(),
                });
            }
            u.validate(n, t)?;
        }
        members.sort_unstable();
        members.dedup();
        Ok(MonomialSet { n, d, t, members })
    }

    pub fn empty(n: u32, d: u32, t: u32) -> Self {
        MonomialSet {
            n,
            d,
            t,
            members: Vec::new(),
        }
    }

    /// Caller guarantees validity and canonical order.
    pub(crate) fn from_sorted(n: u32, d: u32, t: u32, members: Vec<Monomial>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        MonomialSet { n, d, t, members }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn spread(&self) -> u32 {
        self.t
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Monomial> {
        self.members.iter()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.members.binary_search(u).is_ok()
    }

    /// Lex-greatest member.
    pub fn first(&self) -> Option<&Monomial> {
        self.members.first()
    }

    /// Lex-smallest member.
    pub fn last(&self) -> Option<&Monomial> {
        self.members.last()
    }

    pub fn is_subset(&self, other: &MonomialSet) -> bool {
        self.members.iter().all(|u| other.contains(u))
    }

    pub fn into_members(self) -> Vec<Monomial> {
        self.members
    }
}

impl<'a> IntoIterator for &'a MonomialSet {
    type Item = &'a Monomial;
    type IntoIter = std::slice::Iter<'a, Monomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    /// Every d-subset of [n] with gaps >= t, sorted into descending lex.
    fn brute(n: u32, d: u32, t: u32) -> Vec<Vec<u32>> {
        fn rec(n: u32, d: usize, t: u32, from: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if acc.len() == d {
                out.push(acc.clone());
                return;
            }
            for i in from..=n {
                if acc.last().is_none_or(|&l| i >= l + t) {
                    acc.push(i);
                    rec(n, d, t, i + 1, acc, out);
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(n, d as usize, t, 1, &mut Vec::new(), &mut out);
        // Descending lex is ascending order of index vectors.
        out.sort();
        out
    }

    #[test]
    fn spread_examples() {
        assert!(m("x2x5x8").is_t_spread(3));
        assert!(!m("x2x5x8").is_t_spread(4));
        assert!(m("x7").is_t_spread(100));
        assert!(m("x1x3x5").is_t_spread(2));
    }

    #[test]
    fn lex_examples() {
        assert_eq!(
            m("x1x5x7").lex_cmp(&m("x2x4x6")).unwrap(),
            Ordering::Greater
        );
        assert_eq!(m("x1x3").lex_cmp(&m("x1x3")).unwrap(), Ordering::Equal);
        assert_eq!(m("x1x4").lex_cmp(&m("x1x3")).unwrap(), Ordering::Less);
        assert!(matches!(
            m("x1x4").lex_cmp(&m("x1x3x5")),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn parse_both_syntaxes() {
        assert_eq!(m("x1x3x5"), m("1,3,5"));
        assert_eq!(m(" 1, 3 ,5 ").to_string(), "x1x3x5");
        assert!("x3x1".parse::<Monomial>().is_err());
        assert!("x1x1".parse::<Monomial>().is_err());
        assert!("x0x2".parse::<Monomial>().is_err());
        assert!("".parse::<Monomial>().is_err());
        assert!("x1y2".parse::<Monomial>().is_err());
        assert!("1,,3".parse::<Monomial>().is_err());
    }

    #[test]
    fn enumerate_small() {
        let set = enumerate_tspread(5, 2, 2).unwrap();
        let got: Vec<String> = set.iter().map(|u| u.to_string()).collect();
        assert_eq!(got, ["x1x3", "x1x4", "x1x5", "x2x4", "x2x5", "x3x5"]);
        assert_eq!(count_tspread(5, 2, 2), BigUint::from(6u32));
        assert_eq!(
            enumerate_tspread(9, 3, 3).unwrap().first(),
            Some(&m("x1x4x7"))
        );
        assert!(enumerate_tspread(6, 3, 3).unwrap().is_empty());
        assert!(matches!(
            enumerate_tspread(5, 2, 0),
            Err(Error::ZeroSpread(0))
        ));
    }

    #[test]
    fn counts() {
        assert_eq!(count_tspread(28, 8, 3), BigUint::from(3003u32));
        assert_eq!(count_tspread(8, 4, 2), BigUint::from(5u32));
        assert_eq!(enumerate_tspread(8, 4, 2).unwrap().len(), 5);
        for n in 1..20 {
            for t in 1..5 {
                assert_eq!(count_tspread(n, 1, t), BigUint::from(n));
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force_and_count() {
        for n in 1..=12 {
            for d in 1..=5 {
                for t in 1..=3 {
                    let set = enumerate_tspread(n, d, t).unwrap();
                    let want = brute(n, d, t);
                    let got: Vec<Vec<u32>> = set.iter().map(|u| u.indices().to_vec()).collect();
                    assert_eq!(got, want, "M_{{{n},{d},{t}}}");
                    assert_eq!(BigUint::from(set.len()), count_tspread(n, d, t));
                    for w in set.members().windows(2) {
                        assert_eq!(w[0].lex_cmp(&w[1]).unwrap(), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn divisibility() {
        assert!(m("x1x3").divides(&m("x1x3x5")));
        assert!(!m("x2x4").divides(&m("x1x3x5")));
        assert!(!m("x1x3x5").divides(&m("x1x3")));
    }

    #[test]
    fn set_validation() {
        assert!(MonomialSet::new(5, 2, 2, [m("x1x2")]).is_err());
        assert!(MonomialSet::new(5, 2, 2, [m("x1x6")]).is_err());
        assert!(MonomialSet::new(5, 2, 2, [m("x1x3x5")]).is_err());
        let s = MonomialSet::new(5, 2, 2, [m("x2x4"), m("x1x3"), m("x2x4")]).unwrap();
        assert_eq!(s.members(), [m("x1x3"), m("x2x4")]);
    }

    fn arb_monomial(max_n: u32, d: usize) -> impl Strategy<Value = Monomial> {
        proptest::sample::subsequence((1..=max_n).collect::<Vec<_>>(), d)
            .prop_map(Monomial::from_sorted)
    }

    proptest! {
        #[test]
        fn spread_is_monotone(u in arb_monomial(20, 4), t in 0u32..8) {
            if u.is_t_spread(t) {
                for s in 0..=t {
                    prop_assert!(u.is_t_spread(s));
                }
            }
        }

        #[test]
        fn lex_is_a_total_order(
            a in arb_monomial(12, 3),
            b in arb_monomial(12, 3),
            c in arb_monomial(12, 3),
        ) {
            let ab = a.lex_cmp(&b).unwrap();
            prop_assert_eq!(ab.reverse(), b.lex_cmp(&a).unwrap());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab != Ordering::Less && b.lex_cmp(&c).unwrap() != Ordering::Less {
                prop_assert!(a.lex_cmp(&c).unwrap() != Ordering::Less);
            }
        }

        #[test]
        fn display_parse_round_trip(u in arb_monomial(40, 5)) {
            prop_assert_eq!(u.to_string().parse::<Monomial>().unwrap(), u);
        }
    }
}

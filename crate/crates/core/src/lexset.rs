//! Lex segments of `M_{n,d,t}`, shadows and max-index statistics.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::expansion::{macaulay_expand, t_successor};
use crate::monomial::{check_params, count_tspread, Monomial, MonomialSet, TSpreadIter};

/// The t-spread lex set of a given size: the `size` lex-greatest elements of
/// `M_{n,d,t}`. Only the cardinality is stored; see [`LexSegment::materialize`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LexSegment {
    n: u32,
    d: u32,
    t: u32,
    size: BigUint,
}

impl LexSegment {
    pub fn new(n: u32, d: u32, t: u32, size: BigUint) -> Result<Self> {
        check_params(n, d, t)?;
        let count = count_tspread(n, d, t);
        if size > count {
            return Err(Error::ExceedsCount {
                a: size,
                n,
                d,
                t,
                bound: count,
            });
        }
        Ok(LexSegment { n, d, t, size })
    }

    pub fn full(n: u32, d: u32, t: u32) -> Result<Self> {
        Self::new(n, d, t, count_tspread(n, d, t))
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

    pub fn size(&self) -> &BigUint {
        &self.size
    }

    /// `|M_{n,d,t} \ L|`.
    pub fn complement(&self) -> BigUint {
        count_tspread(self.n, self.d, self.t) - &self.size
    }

    /// Lex-smallest member, computed from the complement size without
    /// enumerating.
    pub fn smallest(&self) -> Option<Monomial> {
        if self.size.is_zero() {
            return None;
        }
        let rank = self.complement();
        Some(
            monomial_from_complement_count(&rank, self.n, self.d, self.t)
                .expect("complement of a nonempty segment is in range"),
        )
    }

    pub fn materialize(&self) -> Result<MonomialSet> {
        let size = self.size.to_usize().ok_or_else(|| {
            Error::SizeGuard(format!(
                "lex segment of size {} is too large to list",
                self.size
            ))
        })?;
        let members = TSpreadIter::new(self.n, self.d, self.t)
            .take(size)
            .collect();
        Ok(MonomialSet::from_sorted(self.n, self.d, self.t, members))
    }

    /// `shad_t` of this segment, which is again a lex segment. Its size is
    /// `|M_{n,d+1,t}| - a^[d]_t` with `a` the complement size.
    pub fn shadow(&self) -> LexSegment {
        let uncovered = t_successor(&self.complement(), self.d, self.t, self.n)
            .expect("complement never exceeds |M_{n,d,t}|");
        let size = count_tspread(self.n, self.d + 1, self.t) - uncovered;
        LexSegment {
            n: self.n,
            d: self.d + 1,
            t: self.t,
            size,
        }
    }
}

/// Number of elements of `M_{n,d,t}` strictly lex-smaller than `u`:
/// `sum_j C(a_j, j)` with `a_j = n - i_{d-j+1} - (j-1)(t-1)`.
pub fn complement_count(u: &Monomial, n: u32, t: u32) -> Result<BigUint> {
    if t == 0 {
        return Err(Error::ZeroSpread(t));
    }
    u.validate(n, t)?;
    let idx = u.indices();
    let d = idx.len();
    let (n, t) = (n as i64, t as i64);
    Ok((1..=d)
        .map(|j| {
            let top = n - idx[d - j] as i64 - (j as i64 - 1) * (t - 1);
            binomial(top, j as i64)
        })
        .sum())
}

/// Inverse of [`complement_count`]: the unique `u` in `M_{n,d,t}` with exactly
/// `a` elements below it. `a = 0` gives the lex-smallest monomial.
pub fn monomial_from_complement_count(a: &BigUint, n: u32, d: u32, t: u32) -> Result<Monomial> {
    check_params(n, d, t)?;
    let count = count_tspread(n, d, t);
    if *a >= count {
        return Err(Error::RankOutOfRange {
            a: a.clone(),
            n,
            d,
            t,
            count,
        });
    }
    let expansion = macaulay_expand(a, d)?;
    let (n64, t64) = (n as i64, t as i64);
    // Below the lowest term, a_j = j - 1 (these binomials vanish).
    let indices = (1..=d)
        .map(|k| {
            let j = d - k + 1;
            let top = expansion.top(j).map_or(j as i64 - 1, |v| v as i64);
            (n64 - top - (j as i64 - 1) * (t64 - 1)) as u32
        })
        .collect();
    Ok(Monomial::from_sorted(indices))
}

/// Counts `m_i(L)` of members with largest index `i`, and their running sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxIndexProfile {
    counts: Vec<usize>,
    cumulative: Vec<usize>,
}

impl MaxIndexProfile {
    pub fn n(&self) -> u32 {
        (self.counts.len() - 1) as u32
    }

    /// `m_i(L)`; zero outside `1..=n`.
    pub fn count(&self, i: i64) -> usize {
        if i < 1 || i as usize >= self.counts.len() {
            0
        } else {
            self.counts[i as usize]
        }
    }

    /// `m_{<=i}(L)`; zero for `i < 1`, the set size for `i >= n`.
    pub fn cumulative(&self, i: i64) -> usize {
        if i < 1 {
            0
        } else {
            let i = (i as usize).min(self.cumulative.len() - 1);
            self.cumulative[i]
        }
    }

    pub fn total(&self) -> usize {
        *self.cumulative.last().unwrap_or(&0)
    }
}

pub fn max_index_profile(set: &MonomialSet) -> MaxIndexProfile {
    let n = set.n() as usize;
    let mut counts = vec![0usize; n + 1];
    for u in set {
        counts[u.max_index() as usize] += 1;
    }
    let cumulative = counts
        .iter()
        .scan(0usize, |acc, &c| {
            *acc += c;
            Some(*acc)
        })
        .collect();
    MaxIndexProfile { counts, cumulative }
}

/// `shad_tau(L)`: all tau-spread degree `d+1` monomials `x_i v` with `v` in `L`.
///
/// `1 <= tau <= t` is required; `tau = 0` would leave the square-free world.
pub fn shadow(set: &MonomialSet, tau: u32) -> Result<MonomialSet> {
    if tau == 0 {
        return Err(Error::ZeroSpread(tau));
    }
    if tau > set.spread() {
        return Err(Error::TauExceedsSpread {
            tau,
            t: set.spread(),
        });
    }
    let n = set.n();
    let mut out = Vec::new();
    for v in set {
        let idx = v.indices();
        // Admissible slots: before the first index, between neighbours, after the last.
        let mut lo = 1u32;
        for &i in idx {
            let hi = i.saturating_sub(tau);
            for x in lo..=hi {
                out.push(v.times_var(x).expect("slot avoids the support"));
            }
            lo = i + tau;
        }
        for x in lo..=n {
            out.push(v.times_var(x).expect("slot avoids the support"));
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(MonomialSet::from_sorted(n, set.degree() + 1, tau, out))
}

/// `sum_{i = 1+(d-1)t}^{n-t} m_{<=i}(L)`, the shadow size of a strongly
/// stable set.
pub fn shadow_size_by_formula(set: &MonomialSet) -> Result<usize> {
    if !is_strongly_stable_set(set) {
        return Err(Error::NotStronglyStable { t: set.spread() });
    }
    let (n, d, t) = (set.n() as i64, set.degree() as i64, set.spread() as i64);
    let profile = max_index_profile(set);
    Ok((1 + (d - 1) * t..=n - t)
        .map(|i| profile.cumulative(i))
        .sum())
}

/// True iff `set` is an initial segment of `M_{n,d,t}` in descending lex order.
pub fn is_lex_set(set: &MonomialSet) -> bool {
    TSpreadIter::new(set.n(), set.degree(), set.spread())
        .zip(set.iter())
        .all(|(expected, got)| expected == *got)
}

/// True iff `x_i (u / x_j)` is in the set whenever `u` is, `j` divides `u`,
/// `i < j` and the exchange is still t-spread.
pub fn is_strongly_stable_set(set: &MonomialSet) -> bool {
    let t = set.spread();
    set.iter().all(|u| {
        u.indices().iter().all(|&j| {
            (1..j).all(|i| match u.exchange(j, i) {
                Some(w) if w.is_t_spread(t) => set.contains(&w),
                _ => true,
            })
        })
    })
}

/// The lex segment with the same parameters and size as `set`.
pub fn segment_of(set: &MonomialSet) -> Result<LexSegment> {
    LexSegment::new(
        set.n(),
        set.degree(),
        set.spread(),
        BigUint::from(set.len()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::enumerate_tspread;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn set(n: u32, d: u32, t: u32, items: &[&str]) -> MonomialSet {
        MonomialSet::new(n, d, t, items.iter().map(|s| m(s))).unwrap()
    }

    fn names(s: &MonomialSet) -> Vec<String> {
        s.iter().map(|u| u.to_string()).collect()
    }

    fn segment(n: u32, d: u32, t: u32, size: u64) -> MonomialSet {
        LexSegment::new(n, d, t, BigUint::from(size))
            .unwrap()
            .materialize()
            .unwrap()
    }

    #[test]
    fn materialize_examples() {
        assert_eq!(
            names(&segment(5, 2, 2, 4)),
            ["x1x3", "x1x4", "x1x5", "x2x4"]
        );
        assert!(segment(5, 2, 2, 0).is_empty());
        assert_eq!(names(&segment(8, 2, 2, 3)), ["x1x3", "x1x4", "x1x5"]);
        assert!(LexSegment::new(5, 2, 2, BigUint::from(7u32)).is_err());
    }

    #[test]
    fn complement_count_examples() {
        assert_eq!(
            complement_count(&m("x1x3x5"), 8, 2).unwrap(),
            BigUint::from(19u32)
        );
        for (n, d, t) in [(8, 3, 2), (9, 3, 3), (7, 2, 1)] {
            let all = enumerate_tspread(n, d, t).unwrap();
            let top = all.first().unwrap();
            assert_eq!(
                complement_count(top, n, t).unwrap(),
                BigUint::from(all.len() - 1)
            );
        }
        // Rank of x2x5x8 inside M_{9,3,3} by position in the enumeration.
        let all = enumerate_tspread(9, 3, 3).unwrap();
        let pos = all.iter().position(|u| *u == m("x2x5x8")).unwrap();
        assert_eq!(
            complement_count(&m("x2x5x8"), 9, 3).unwrap(),
            BigUint::from(all.len() - 1 - pos)
        );
        assert!(complement_count(&m("x1x2"), 8, 2).is_err());
        assert!(complement_count(&m("x1x9"), 8, 2).is_err());
    }

    #[test]
    fn inverse_of_complement_count() {
        assert_eq!(
            monomial_from_complement_count(&BigUint::from(19u32), 8, 3, 2).unwrap(),
            m("x1x3x5")
        );
        for (n, d, t) in [(8, 3, 2), (9, 3, 3), (10, 4, 2), (6, 2, 1)] {
            let all = enumerate_tspread(n, d, t).unwrap();
            let zero = monomial_from_complement_count(&BigUint::zero(), n, d, t).unwrap();
            assert_eq!(Some(&zero), all.last());
            let top =
                monomial_from_complement_count(&BigUint::from(all.len() - 1), n, d, t).unwrap();
            assert_eq!(Some(&top), all.first());
            assert!(matches!(
                monomial_from_complement_count(&BigUint::from(all.len()), n, d, t),
                Err(Error::RankOutOfRange { .. })
            ));
        }
    }

    #[test]
    fn complement_count_is_a_bijection() {
        for n in 1..=9 {
            for d in 1..=4 {
                for t in 1..=3 {
                    let all = enumerate_tspread(n, d, t).unwrap();
                    for (pos, u) in all.iter().enumerate() {
                        let rank = complement_count(u, n, t).unwrap();
                        assert_eq!(rank, BigUint::from(all.len() - 1 - pos));
                        assert_eq!(monomial_from_complement_count(&rank, n, d, t).unwrap(), *u);
                    }
                }
            }
        }
    }

    #[test]
    fn shadow_examples() {
        let lex = set(5, 2, 2, &["x1x3", "x1x4", "x1x5", "x2x4"]);
        let s1 = shadow(&lex, 1).unwrap();
        assert_eq!(
            names(&s1),
            ["x1x2x3", "x1x2x4", "x1x2x5", "x1x3x4", "x1x3x5", "x1x4x5", "x2x3x4", "x2x4x5"]
        );
        assert!(!s1.contains(&m("x2x3x5")));
        assert!(!is_strongly_stable_set(&s1));

        let b2 = set(8, 2, 2, &["x1x3", "x1x4", "x1x5"]);
        assert_eq!(shadow(&b2, 2).unwrap().len(), 9);
        assert!(shadow(&MonomialSet::empty(6, 2, 2), 2).unwrap().is_empty());
        assert!(matches!(
            shadow(&b2, 3),
            Err(Error::TauExceedsSpread { .. })
        ));
        assert!(matches!(shadow(&b2, 0), Err(Error::ZeroSpread(0))));
    }

    #[test]
    fn profile_examples() {
        let l = set(5, 2, 2, &["x1x3", "x1x4", "x1x5", "x2x4"]);
        let p = max_index_profile(&l);
        assert_eq!((p.count(3), p.count(4), p.count(5)), (1, 2, 1));
        assert_eq!(p.cumulative(4), 3);
        assert_eq!(p.total(), 4);

        let p = max_index_profile(&MonomialSet::empty(5, 2, 2));
        assert!((0..=6).all(|i| p.count(i) == 0 && p.cumulative(i) == 0));

        let full = LexSegment::full(8, 2, 2).unwrap().materialize().unwrap();
        assert_eq!(max_index_profile(&full).cumulative(8), 21);
    }

    #[test]
    fn formula_size_examples() {
        let b2 = set(8, 2, 2, &["x1x3", "x1x4", "x1x5"]);
        assert_eq!(shadow_size_by_formula(&b2).unwrap(), 9);
        assert_eq!(
            shadow_size_by_formula(&MonomialSet::empty(8, 2, 2)).unwrap(),
            0
        );
        let unstable = set(8, 2, 2, &["x2x4"]);
        assert!(matches!(
            shadow_size_by_formula(&unstable),
            Err(Error::NotStronglyStable { .. })
        ));
    }

    #[test]
    fn lex_predicate() {
        let l = set(3, 2, 1, &["x1x2", "x1x3", "x2x3"]);
        assert!(is_lex_set(&l));
        let l4 = set(4, 2, 1, &["x1x2", "x1x3", "x2x3"]);
        assert!(!is_lex_set(&l4));
        assert!(is_lex_set(&MonomialSet::empty(4, 2, 2)));
        assert!(is_lex_set(&enumerate_tspread(7, 3, 2).unwrap()));
        assert!(!is_lex_set(&set(4, 2, 2, &["x1x3", "x2x4"])));
    }

    #[test]
    fn stable_predicate() {
        let part = set(
            8,
            3,
            2,
            &[
                "x1x3x5", "x1x3x6", "x1x3x7", "x1x3x8", "x1x4x6", "x1x4x7", "x1x4x8", "x2x4x6",
                "x2x4x7", "x2x4x8",
            ],
        );
        assert!(is_strongly_stable_set(&part));
        for n in 1..=8 {
            for d in 1..=3 {
                for t in 1..=3 {
                    let all = enumerate_tspread(n, d, t).unwrap();
                    for size in 0..=all.len() {
                        let seg = segment(n, d, t, size as u64);
                        assert!(is_strongly_stable_set(&seg));
                        assert!(is_lex_set(&seg));
                    }
                }
            }
        }
    }

    #[test]
    fn segment_shadow_and_smallest() {
        let seg = LexSegment::new(8, 2, 2, BigUint::from(3u32)).unwrap();
        assert_eq!(seg.shadow().size(), &BigUint::from(9u32));
        assert_eq!(seg.smallest(), Some(m("x1x5")));
        assert_eq!(
            LexSegment::new(8, 2, 2, BigUint::zero())
                .unwrap()
                .smallest(),
            None
        );
    }
}

//! Feasibility of f_t-vectors of t-spread strongly stable ideals.
//!
//! A sequence `f = (f(0), f(1), ...)` (zero-extended) is the f_t-vector of a
//! t-spread strongly stable ideal iff `f(0) = 1` and
//! `f(d+1) <= f(d)^[d]_t` for all `d >= 1`, where the operator is taken in
//! `n = f(1)` variables. A witness is the t-spread lex ideal whose degree `d`
//! part is the lex set of size `|M_{n,d,t}| - f(d)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::expansion::t_successor;
use crate::ideal::{lex_ideal_from_sizes, FtVector, TSpreadIdeal, TlexOutcome};
use crate::monomial::{count_tspread, max_degree};

/// `f(degree + 1) = value` exceeds `bound = f(degree)^[degree]_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub degree: u32,
    pub bound: BigUint,
    pub value: BigUint,
}

/// `bound = f(degree)^[degree]_t`, the largest admissible `f(degree + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub degree: u32,
    pub value: BigUint,
    pub bound: BigUint,
    pub next: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub feasible: bool,
    pub n: u32,
    pub t: u32,
    /// Set when the sequence is rejected before the chain is examined.
    pub reason: Option<String>,
    pub violation: Option<Violation>,
    pub bounds: Vec<BoundRow>,
}

impl FeasibilityReport {
    pub fn summary(&self) -> String {
        if self.feasible {
            return format!("feasible (n = {}, t = {})", self.n, self.t);
        }
        if let Some(reason) = &self.reason {
            return format!("infeasible: {reason}");
        }
        match &self.violation {
            Some(v) => format!(
                "infeasible at d={}: f({}) = {} > {} = f({})^[{}]_{}",
                v.degree,
                v.degree + 1,
                v.value,
                v.bound,
                v.degree,
                v.degree,
                self.t
            ),
            None => "infeasible".to_string(),
        }
    }
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

fn ambient(f: &FtVector) -> Result<u32> {
    f.get(1)
        .to_u32()
        .ok_or_else(|| Error::InvalidParameter(format!("f(1) = {} is too large for n", f.get(1))))
}

/// Checks `f(0) = 1` and `f(d+1) <= f(d)^[d]_t` in `n = f(1)` variables,
/// stopping at the first violation.
pub fn kk_check(f: &FtVector, t: u32) -> Result<FeasibilityReport> {
    if t == 0 {
        return Err(Error::ZeroSpread(t));
    }
    let n = ambient(f)?;
    let mut report = FeasibilityReport {
        feasible: true,
        n,
        t,
        reason: None,
        violation: None,
        bounds: Vec::new(),
    };
    if !f.get(0).is_one() {
        report.feasible = false;
        report.reason = Some(format!("f(0) must be 1, found {}", f.get(0)));
        return Ok(report);
    }
    // The step into the first implicit zero is trivially satisfied; the last
    // stored nonzero entry still gets its bound row.
    let last = f.trimmed().len().saturating_sub(1);
    for d in 1..=last as u32 {
        let value = f.get(d as usize);
        let next = f.get(d as usize + 1);
        let bound = t_successor(&value, d, t, n)?;
        let violated = next > bound;
        report.bounds.push(BoundRow {
            degree: d,
            value,
            bound: bound.clone(),
            next: next.clone(),
        });
        if violated {
            report.feasible = false;
            report.violation = Some(Violation {
                degree: d,
                bound,
                value: next,
            });
            break;
        }
    }
    Ok(report)
}

/// The t-spread lex ideal in `f(1)` variables whose f_t-vector is `f`.
pub fn kk_witness(f: &FtVector, t: u32) -> Result<TSpreadIdeal> {
    let report = kk_check(f, t)?;
    if !report.feasible {
        return Err(Error::Infeasible(Box::new(report)));
    }
    let n = report.n;
    let sizes: Vec<BigUint> = (1..=max_degree(n, t))
        .map(|d| count_tspread(n, d, t) - f.get(d as usize))
        .collect();
    match lex_ideal_from_sizes(n, t, &sizes)? {
        TlexOutcome::Lex { ideal, .. } => Ok(ideal),
        TlexOutcome::Obstructed(o) => {
            let mut report = report;
            report.feasible = false;
            report.reason = Some(format!("lex sets do not nest at degree {}", o.degree));
            Err(Error::Infeasible(Box::new(report)))
        }
    }
}

/// Every sequence with `f(0) = 1`, `f(1) = n` that passes [`kk_check`],
/// in increasing order. Fails once more than `limit` sequences are found.
pub fn enumerate_feasible(n: u32, t: u32, limit: usize) -> Result<Vec<FtVector>> {
    if t == 0 {
        return Err(Error::ZeroSpread(t));
    }
    fn walk(
        d: u32,
        prefix: &mut Vec<BigUint>,
        n: u32,
        t: u32,
        limit: usize,
        out: &mut Vec<FtVector>,
    ) -> Result<()> {
        let bound = t_successor(prefix.last().expect("prefix holds f(0), f(1)"), d, t, n)?;
        let mut next = BigUint::zero();
        loop {
            if next.is_zero() {
                if out.len() >= limit {
                    return Err(Error::SizeGuard(format!(
                        "more than {limit} feasible sequences for n = {n}, t = {t}"
                    )));
                }
                out.push(FtVector::new(prefix.clone()));
            } else {
                prefix.push(next.clone());
                walk(d + 1, prefix, n, t, limit, out)?;
                prefix.pop();
            }
            if next >= bound {
                break;
            }
            next += 1u32;
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut prefix = vec![BigUint::one(), BigUint::from(n)];
    if n == 0 {
        out.push(FtVector::new(prefix));
    } else {
        walk(1, &mut prefix, n, t, limit, &mut out)?;
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(s: &str) -> FtVector {
        s.parse().unwrap()
    }

    #[test]
    fn final_example() {
        let f = fv("1,12,50,20,15,0");
        let r1 = kk_check(&f, 1).unwrap();
        assert!(r1.feasible, "{}", r1.summary());
        assert_eq!(r1.n, 12);
        let bounds: Vec<u64> = r1
            .bounds
            .iter()
            .map(|b| b.bound.to_u64().unwrap())
            .collect();
        assert_eq!(bounds, [66, 130, 15, 6]);

        let r2 = kk_check(&f, 2).unwrap();
        assert!(!r2.feasible);
        let v = r2.violation.unwrap();
        assert_eq!(
            (v.degree, v.bound.to_u64(), v.value.to_u64()),
            (3, Some(5), Some(15))
        );

        let r3 = kk_check(&f, 3).unwrap();
        let v = r3.violation.unwrap();
        assert_eq!(
            (v.degree, v.bound.to_u64(), v.value.to_u64()),
            (1, Some(45), Some(50))
        );
    }

    #[test]
    fn first_entry_must_be_one() {
        let r = kk_check(&fv("2,3,1"), 1).unwrap();
        assert!(!r.feasible);
        assert!(r.reason.is_some());
        assert!(!kk_check(&fv("0"), 2).unwrap().feasible);
        assert!(kk_check(&fv("1"), 2).unwrap().feasible);
    }

    #[test]
    fn gap_then_nonzero_is_infeasible() {
        let r = kk_check(&fv("1,4,0,1"), 1).unwrap();
        assert_eq!(r.violation.unwrap().degree, 2);
    }

    #[test]
    fn witness_examples() {
        let f = fv("1,12,50,20,15");
        let w = kk_witness(&f, 1).unwrap();
        assert_eq!(w.n(), 12);
        assert_eq!(w.ft_vector(), f);
        assert!(w.is_lex());
        let sizes: Vec<usize> = (2..=5).map(|d| w.graded_part(d).len()).collect();
        assert_eq!(sizes, [16, 200, 480, 792]);

        let zero = kk_witness(&fv("1,7,21,35,35,21,7,1"), 1).unwrap();
        assert!(zero.generators().is_empty());

        let w = kk_witness(&fv("1,4,1"), 2).unwrap();
        assert_eq!(w.ft_vector(), FtVector::from_u64s(&[1, 4, 1, 0]));
        assert!(w.is_lex());

        match kk_witness(&f, 2) {
            Err(Error::Infeasible(report)) => assert_eq!(report.violation.unwrap().degree, 3),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn feasible_chain_stays_within_counts() {
        for n in 1..=7 {
            for t in 1..=3 {
                for f in enumerate_feasible(n, t, 1_000_000).unwrap() {
                    assert!(kk_check(&f, t).unwrap().feasible);
                    for d in 1..f.len() {
                        assert!(f.get(d) <= count_tspread(n, d as u32, t), "{f} t = {t}");
                    }
                }
            }
        }
    }
}

//! Exhaustive and randomized cross-checks of the structured algorithms
//! against [`crate::oracle`].
//!
//! Each sweep returns a [`SweepReport`]; a sweep passes when it checked at
//! least one case and recorded no failures.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::expansion::{classic_successor, t_successor, t_successor_casewise};
use crate::ideal::{strongly_stable_closure, tlex, FtVector, TlexOutcome};
use crate::kk::{enumerate_feasible, kk_check, kk_witness};
use crate::lexset::{
    complement_count, is_lex_set, is_strongly_stable_set, max_index_profile,
    monomial_from_complement_count, shadow, shadow_size_by_formula, MaxIndexProfile,
};
use crate::monomial::{max_degree, Monomial, MonomialSet, TSpreadIter};
use crate::oracle::{
    brute_complement_count, brute_kk_universe, brute_shadow, enumerate_strongly_stable_sets,
    OracleLimits,
};

/// Failures kept per report; the count is always exact.
const MAX_RECORDED: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub name: &'static str,
    pub checked: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl SweepReport {
    fn new(name: &'static str) -> Self {
        SweepReport {
            name,
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.checked > 0 && self.failed == 0
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "{:<28} {status:<6} checked {}, mismatches {}",
            self.name, self.checked, self.failed
        )?;
        for failure in &self.failures {
            write!(f, "\n    {failure}")?;
        }
        Ok(())
    }
}

/// `n` ranges for every sweep. `n` starts at 1 unless stated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub shadow_count_n: u32,
    pub shadow_count_d: u32,
    pub spread: u32,
    pub structure_n: u32,
    pub structure_d: u32,
    pub dominance_n: u32,
    pub dominance_d: u32,
    pub complement_n: u32,
    pub complement_d: u32,
    pub random_ideals: usize,
    pub random_n: u32,
    pub seed: u64,
    pub kk_n: u32,
    pub classic_n: u32,
    pub classic_d: u32,
    pub limits: OracleLimits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            shadow_count_n: 10,
            shadow_count_d: 3,
            spread: 3,
            structure_n: 9,
            structure_d: 3,
            dominance_n: 7,
            dominance_d: 3,
            complement_n: 9,
            complement_d: 4,
            random_ideals: 200,
            random_n: 9,
            seed: 0x7_5eed,
            kk_n: 6,
            classic_n: 12,
            classic_d: 4,
            limits: OracleLimits::default(),
        }
    }
}

impl VerifyConfig {
    /// Caps every `n` range at `max_n`.
    pub fn with_max_n(mut self, max_n: u32) -> Self {
        for n in [
            &mut self.shadow_count_n,
            &mut self.structure_n,
            &mut self.dominance_n,
            &mut self.complement_n,
            &mut self.random_n,
            &mut self.kk_n,
            &mut self.classic_n,
        ] {
            *n = (*n).min(max_n);
        }
        self
    }
}

fn params(max_n: u32, max_d: u32, max_t: u32) -> impl Iterator<Item = (u32, u32, u32)> {
    (1..=max_n).flat_map(move |n| {
        (1..=max_t).flat_map(move |t| (1..=max_d.min(max_degree(n, t))).map(move |d| (n, d, t)))
    })
}

/// Every lex segment of `M_{n,d,t}`, smallest first, including the empty one.
fn lex_segments(n: u32, d: u32, t: u32) -> Vec<MonomialSet> {
    let all: Vec<Monomial> = TSpreadIter::new(n, d, t).collect();
    (0..=all.len())
        .map(|k| MonomialSet::new(n, d, t, all[..k].iter().cloned()).expect("valid"))
        .collect()
}

/// `|M_{n,d+1,t}| - |shad_t(L)|` computed by brute force equals the
/// t-successor of `|M_{n,d,t} \ L|` for every nonempty lex segment `L`.
pub fn sweep_shadow_count(cfg: &VerifyConfig) -> Result<SweepReport> {
    let mut report = SweepReport::new("lex shadow cardinality");
    for (n, d, t) in params(cfg.shadow_count_n, cfg.shadow_count_d, cfg.spread) {
        let size = TSpreadIter::new(n, d, t).count();
        let next_size = TSpreadIter::new(n, d + 1, t).count();
        for l in lex_segments(n, d, t).into_iter().skip(1) {
            let brute = next_size - brute_shadow(&l, t)?.len();
            let a = BigUint::from(size - l.len());
            let formula = t_successor(&a, d, t, n)?;
            report.check(formula == BigUint::from(brute), || {
                format!(
                    "n={n} d={d} t={t} |L|={}: formula {formula}, brute {brute}",
                    l.len()
                )
            });
        }
    }
    Ok(report)
}

/// How often the literal casewise operator disagrees with brute force over
/// the same range. Informational: a nonzero count is expected for `t >= 2`.
pub fn casewise_disagreements(cfg: &VerifyConfig) -> Result<(u64, u64)> {
    let (mut checked, mut wrong) = (0, 0);
    for (n, d, t) in params(cfg.shadow_count_n, cfg.shadow_count_d, cfg.spread) {
        let size = TSpreadIter::new(n, d, t).count();
        let next_size = TSpreadIter::new(n, d + 1, t).count();
        for l in lex_segments(n, d, t).into_iter().skip(1) {
            let brute = next_size - brute_shadow(&l, t)?.len();
            let a = BigUint::from(size - l.len());
            checked += 1;
            if t_successor_casewise(&a, d, t, n)? != BigUint::from(brute) {
                wrong += 1;
            }
        }
    }
    Ok((checked, wrong))
}

fn profile_matches(
    shadow_profile: &MaxIndexProfile,
    base: &MaxIndexProfile,
    n: u32,
    t: u32,
) -> bool {
    (1..=n as i64).all(|i| shadow_profile.count(i) == base.cumulative(i - t as i64))
}

/// For every strongly stable `L`: the slot-insertion shadow equals the brute
/// shadow, is strongly stable, has `m_i(shad) = m_{<=i-t}(L)` and the closed
/// size formula. For lex `L`, the shadow is lex.
pub fn sweep_shadow_structure(cfg: &VerifyConfig) -> Result<SweepReport> {
    let mut report = SweepReport::new("stable shadow structure");
    for (n, d, t) in params(cfg.structure_n, cfg.structure_d, cfg.spread) {
        for l in enumerate_strongly_stable_sets(n, d, t, &cfg.limits)? {
            let fast = shadow(&l, t)?;
            let brute = brute_shadow(&l, t)?;
            let label = || format!("n={n} d={d} t={t} L={}", join(&l));
            report.check(fast == brute, || {
                format!("{}: shadow differs from brute force", label())
            });
            report.check(is_strongly_stable_set(&brute), || {
                format!("{}: shadow not strongly stable", label())
            });
            let ok = profile_matches(&max_index_profile(&brute), &max_index_profile(&l), n, t);
            report.check(ok, || format!("{}: max-index profile mismatch", label()));
            let by_formula = shadow_size_by_formula(&l)?;
            report.check(by_formula == brute.len(), || {
                format!(
                    "{}: size formula {by_formula}, brute {}",
                    label(),
                    brute.len()
                )
            });
        }
        for l in lex_segments(n, d, t) {
            let brute = brute_shadow(&l, t)?;
            report.check(is_lex_set(&brute), || {
                format!(
                    "n={n} d={d} t={t} |L|={}: shadow of lex set not lex",
                    l.len()
                )
            });
        }
    }
    Ok(report)
}

/// For every strongly stable `N` and lex `L` with `|L| <= |N|`:
/// `m_{<=i}(L) <= m_{<=i}(N)` for all `i`.
pub fn sweep_lex_profile_dominance(cfg: &VerifyConfig) -> Result<SweepReport> {
    let mut report = SweepReport::new("lex max-index dominance");
    for (n, d, t) in params(cfg.dominance_n, cfg.dominance_d, cfg.spread) {
        let lex: Vec<MaxIndexProfile> = lex_segments(n, d, t)
            .iter()
            .map(max_index_profile)
            .collect();
        for stable in enumerate_strongly_stable_sets(n, d, t, &cfg.limits)? {
            let p = max_index_profile(&stable);
            for (size, q) in lex.iter().enumerate().take(stable.len() + 1) {
                let ok = (1..=n as i64).all(|i| q.cumulative(i) <= p.cumulative(i));
                report.check(ok, || {
                    format!("n={n} d={d} t={t} |L|={size} N={}", join(&stable))
                });
            }
        }
    }
    Ok(report)
}

/// `complement_count` matches the scan and inverts `monomial_from_complement_count`.
pub fn sweep_complement_count(cfg: &VerifyConfig) -> Result<SweepReport> {
    let mut report = SweepReport::new("lex rank bijection");
    for (n, d, t) in params(cfg.complement_n, cfg.complement_d, cfg.spread) {
        for u in TSpreadIter::new(n, d, t) {
            let fast = complement_count(&u, n, t)?;
            let brute = brute_complement_count(&u, n, t)?;
            report.check(fast == brute, || {
                format!("n={n} t={t} u={u}: {fast} vs {brute}")
            });
            let back = monomial_from_complement_count(&brute, n, d, t)?;
            report.check(back == u, || {
                format!("n={n} t={t} rank {brute}: {back} vs {u}")
            });
        }
    }
    Ok(report)
}

/// Random t-spread strongly stable ideals: `tlex` succeeds with a lex ideal
/// of the same f_t-vector.
pub fn sweep_random_tlex(cfg: &VerifyConfig) -> Result<SweepReport> {
    let mut report = SweepReport::new("random t-lex ideals");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_ideals {
        let n = rng.gen_range(1..=cfg.random_n.max(1));
        let t = rng.gen_range(1..=cfg.spread.max(1));
        let count = rng.gen_range(1..=4);
        let mut gens = Vec::with_capacity(count);
        for _ in 0..count {
            let d = rng.gen_range(1..=max_degree(n, t));
            let all: Vec<Monomial> = TSpreadIter::new(n, d, t).collect();
            gens.push(all[rng.gen_range(0..all.len())].clone());
        }
        let ideal = strongly_stable_closure(gens, n, t)?;
        let label = || format!("n={n} t={t} gens={}", join(ideal.generators()));
        match tlex(&ideal)? {
            TlexOutcome::Lex { ideal: lex, .. } => {
                report.check(lex.ft_vector() == ideal.ft_vector(), || {
                    format!(
                        "{}: f_t-vector {} vs {}",
                        label(),
                        lex.ft_vector(),
                        ideal.ft_vector()
                    )
                });
                report.check(lex.is_lex(), || format!("{}: result not lex", label()));
            }
            TlexOutcome::Obstructed(o) => report.check(false, || format!("{}: {o}", label())),
        }
    }
    Ok(report)
}

/// The feasibility test agrees with the brute-force universe: a vector with
/// `f(1) = n` is accepted iff some ideal realizes it, and every accepted
/// vector is realized by its witness.
pub fn sweep_kk(cfg: &VerifyConfig) -> Result<SweepReport> {
    let mut report = SweepReport::new("f_t-vector characterization");
    for n in 1..=cfg.kk_n {
        for t in 1..=cfg.spread {
            let universe = brute_kk_universe(n, t, &cfg.limits)?;
            let realized: BTreeSet<FtVector> = universe
                .iter()
                .filter(|f| f.get(1) == BigUint::from(n))
                .cloned()
                .collect();
            let accepted: BTreeSet<FtVector> = enumerate_feasible(n, t, cfg.limits.max_family)?
                .into_iter()
                .collect();
            for f in realized.symmetric_difference(&accepted) {
                let side = if realized.contains(f) {
                    "realized, rejected"
                } else {
                    "accepted, not realized"
                };
                report.check(false, || format!("n={n} t={t} f={f}: {side}"));
            }
            for f in &universe {
                let r = kk_check(f, t)?;
                report.check(r.feasible, || format!("n={n} t={t} f={f}: {}", r.summary()));
            }
            for f in &accepted {
                let w = kk_witness(f, t)?;
                report.check(&w.ft_vector() == f && w.is_lex(), || {
                    format!("n={n} t={t} f={f}: witness has {}", w.ft_vector())
                });
            }
        }
    }
    Ok(report)
}

/// With `t = 1` both forms of the t-successor equal the classical Macaulay
/// operator on `0..=|M_{n,d,1}|`.
pub fn sweep_classic_reduction(cfg: &VerifyConfig) -> Result<SweepReport> {
    let mut report = SweepReport::new("t = 1 reduction");
    for (n, d, _) in params(cfg.classic_n, cfg.classic_d, 1) {
        let size = TSpreadIter::new(n, d, 1).count();
        for a in 0..=size {
            let a = BigUint::from(a);
            let classic = classic_successor(&a, d)?;
            let uniform = t_successor(&a, d, 1, n)?;
            let casewise = t_successor_casewise(&a, d, 1, n)?;
            report.check(uniform == classic && casewise == classic, || {
                format!("n={n} d={d} a={a}: {uniform}, {casewise} vs {classic}")
            });
        }
    }
    Ok(report)
}

/// All sweeps, in a fixed order.
pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SweepReport>> {
    Ok(vec![
        sweep_shadow_count(cfg)?,
        sweep_shadow_structure(cfg)?,
        sweep_lex_profile_dominance(cfg)?,
        sweep_complement_count(cfg)?,
        sweep_random_tlex(cfg)?,
        sweep_kk(cfg)?,
        sweep_classic_reduction(cfg)?,
    ])
}

fn join<'a>(monomials: impl IntoIterator<Item = &'a Monomial>) -> String {
    let parts: Vec<String> = monomials.into_iter().map(|u| u.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

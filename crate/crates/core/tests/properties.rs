use num_bigint::BigUint;
use proptest::prelude::*;

use tspread::expansion::{macaulay_expand, t_successor};
use tspread::ideal::{strongly_stable_closure, tlex};
use tspread::kk::{kk_check, kk_witness};
use tspread::lexset::{complement_count, monomial_from_complement_count, LexSegment};
use tspread::monomial::{max_degree, TSpreadIter};
use tspread::oracle::brute_shadow;
use tspread::{count_tspread, Monomial};

fn params() -> impl Strategy<Value = (u32, u32, u32)> {
    (1u32..=14, 1u32..=4).prop_flat_map(|(n, t)| (Just(n), 1..=max_degree(n, t), Just(t)))
}

fn stable_ideal() -> impl Strategy<Value = (u32, u32, Vec<Vec<u32>>)> {
    (1u32..=9, 1u32..=3).prop_flat_map(|(n, t)| {
        let gens =
            proptest::collection::vec((1..=max_degree(n, t), any::<prop::sample::Index>()), 1..5)
                .prop_map(move |picks| {
                    picks
                        .into_iter()
                        .map(|(d, idx)| {
                            let all: Vec<Monomial> = TSpreadIter::new(n, d, t).collect();
                            all[idx.index(all.len())].indices().to_vec()
                        })
                        .collect()
                });
        (Just(n), Just(t), gens)
    })
}

proptest! {
    #[test]
    fn successor_is_monotone((n, d, t) in params(), x in any::<prop::sample::Index>(), y in any::<prop::sample::Index>()) {
        let size = TSpreadIter::new(n, d, t).count() + 1;
        let (lo, hi) = (x.index(size).min(y.index(size)), x.index(size).max(y.index(size)));
        let (lo, hi) = (BigUint::from(lo), BigUint::from(hi));
        prop_assert!(t_successor(&lo, d, t, n).unwrap() <= t_successor(&hi, d, t, n).unwrap());
    }

    #[test]
    fn successor_never_exceeds_next_count((n, d, t) in params(), x in any::<prop::sample::Index>()) {
        let a = BigUint::from(x.index(TSpreadIter::new(n, d, t).count() + 1));
        prop_assert!(t_successor(&a, d, t, n).unwrap() <= count_tspread(n, d + 1, t));
    }

    #[test]
    fn expansion_round_trip(a in 0u64..1_000_000_000, d in 1u32..12) {
        let e = macaulay_expand(&BigUint::from(a), d).unwrap();
        prop_assert_eq!(e.evaluate(), BigUint::from(a));
    }

    #[test]
    fn rank_round_trip((n, d, t) in params(), pick in any::<prop::sample::Index>()) {
        let all: Vec<Monomial> = TSpreadIter::new(n, d, t).collect();
        let u = &all[pick.index(all.len())];
        let a = complement_count(u, n, t).unwrap();
        prop_assert_eq!(&monomial_from_complement_count(&a, n, d, t).unwrap(), u);
    }

    #[test]
    fn segment_shadow_matches_brute((n, d, t) in params(), pick in any::<prop::sample::Index>()) {
        prop_assume!(n <= 11);
        let size = TSpreadIter::new(n, d, t).count();
        let k = pick.index(size + 1);
        let seg = LexSegment::new(n, d, t, BigUint::from(k)).unwrap();
        let brute = brute_shadow(&seg.materialize().unwrap(), t).unwrap();
        prop_assert_eq!(seg.shadow().size().clone(), BigUint::from(brute.len()));
    }

    #[test]
    fn closures_have_lex_twins((n, t, gens) in stable_ideal()) {
        let gens = gens.iter().map(|g| Monomial::from_indices(g).unwrap());
        let ideal = strongly_stable_closure(gens, n, t).unwrap();
        let out = tlex(&ideal).unwrap();
        let lex = out.ideal().expect("strongly stable ideals admit a t-lex ideal");
        prop_assert_eq!(lex.ft_vector(), ideal.ft_vector());

        let f = ideal.ft_vector();
        if f.get(1) == BigUint::from(n) {
            prop_assert!(kk_check(&f, t).unwrap().feasible);
            let w = kk_witness(&f, t).unwrap();
            prop_assert_eq!(w.generators(), lex.generators());
        }
    }
}

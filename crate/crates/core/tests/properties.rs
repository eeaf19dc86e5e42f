use num::{BigInt, BigRational};
use proptest::prelude::*;

use frobkit::closedforms::{almost_ap_genus, almost_ap_sum, ap_frobenius, ap_genus, ap_sum, APParams, AlmostAPParams};
use frobkit::exactnum::{parse_gaussian, GaussianRational};
use frobkit::oracle::{oracle_report, representability_map};
use frobkit::semigroup::{apery_report, apery_set, GeneratorSet};

fn ratio() -> impl Strategy<Value = BigRational> {
    (-1000i64..=1000, 1i64..=50).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (ratio(), ratio()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn coprime_set() -> impl Strategy<Value = GeneratorSet> {
    (2u64..=40, prop::collection::vec(1u64..=120, 1..5)).prop_filter_map("gcd > 1", |(a1, rest)| {
        GeneratorSet::new(std::iter::once(a1).chain(rest.into_iter().map(|x| a1 + x))).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn field_axioms(x in gaussian(), y in gaussian(), z in gaussian()) {
        prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
        prop_assert_eq!(&x - &x, GaussianRational::zero());
        if !y.is_zero() {
            prop_assert_eq!(x.checked_div(&y).unwrap() * &y, x.clone());
        }
        prop_assert_eq!((&x * &y).conj(), x.conj() * y.conj());
    }

    #[test]
    fn pow_is_a_homomorphism(x in gaussian(), m in 0u64..6, n in 0u64..6) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(x.pow(m + n).unwrap(), x.pow(m).unwrap() * x.pow(n).unwrap());
        prop_assert_eq!(x.pow(m * n).unwrap(), x.pow(m).unwrap().pow(n).unwrap());
        prop_assert_eq!(x.inv().unwrap().pow(n).unwrap(), x.pow(n).unwrap().inv().unwrap());
    }

    #[test]
    fn format_round_trips(x in gaussian()) {
        let text = x.to_string();
        prop_assert_eq!(parse_gaussian(&text).unwrap(), x);
    }

    #[test]
    fn apery_entries_are_minimal(set in coprime_set()) {
        let map = representability_map(&set).unwrap();
        let table = apery_set(&set);
        let a1 = u128::from(set.a1());
        for (i, &m) in table.entries().iter().enumerate() {
            prop_assert_eq!(m % a1, i as u128);
            prop_assert!(map.is_representable(m as u64));
            if m >= a1 {
                prop_assert!(!map.is_representable((m - a1) as u64));
            }
        }
    }

    #[test]
    fn engine_matches_oracle(set in coprime_set()) {
        let engine = apery_report(&set, None).unwrap();
        let oracle = oracle_report(&set, None).unwrap();
        prop_assert!(oracle.is_consistent());
        prop_assert_eq!(engine.frobenius, oracle.frobenius);
        prop_assert_eq!(engine.genus, oracle.genus);
        prop_assert_eq!(engine.sum, oracle.sum);
    }

    #[test]
    fn adding_a_generator_removes_gaps(set in coprime_set(), extra in 1u64..100) {
        let bigger = GeneratorSet::new(set.gens().iter().copied().chain([extra])).unwrap();
        let before = oracle_report(&set, None).unwrap().gaps.unwrap();
        let after = oracle_report(&bigger, None).unwrap().gaps.unwrap();
        prop_assert!(after.iter().all(|g| before.binary_search(g).is_ok()));
        prop_assert!(after.binary_search(&extra).is_err());
    }

    #[test]
    fn progression_bounds(a in 2u64..60, d in 1u64..20, k in 2u64..8) {
        prop_assume!(k <= a);
        let Ok(p) = APParams::new(a, d, k) else { return Ok(()) };
        let (g, n, s) = (ap_frobenius(&p), ap_genus(&p).unwrap(), ap_sum(&p).unwrap());
        // n ≤ g + 1 gaps, each at most g, and the largest is g itself.
        prop_assert!(n <= &g + 1);
        prop_assert!(s <= &n * &g);
        prop_assert!(s >= g.clone());
        prop_assert!(s >= BigInt::from(0));
    }

    #[test]
    fn almost_progression_integral(a in 2u64..40, d in 1u64..10, h in 1u64..6, k in 2u64..8) {
        prop_assume!(k <= a);
        let Ok(p) = AlmostAPParams::new(a, d, h, k) else { return Ok(()) };
        let truth = oracle_report(&GeneratorSet::new(p.generators()).unwrap(), None).unwrap();
        prop_assert_eq!(almost_ap_genus(&p).unwrap(), truth.genus);
        prop_assert_eq!(almost_ap_sum(&p).unwrap(), truth.sum);
    }
}

//! Property-based checks: algebraic laws of the polynomial ring, exactness
//! of root counting, certification of factorization, round-trips of every
//! serialization format, and spectral invariants on random graphs.

mod common;

use algdeg::charpoly::char_poly;
use algdeg::descent::{run_descent, validate_trace, DescentStrategy, StrategyKind};
use algdeg::edgelist::{parse_edge_list, write_edge_list};
use algdeg::factor::{factor, is_irreducible};
use algdeg::graph::{Diameter, Graph};
use algdeg::graph6::{parse_graph6, write_graph6};
use algdeg::intpoly::IntPoly;
use algdeg::polytext::{parse_poly, poly_from_json_coeffs, poly_to_json_coeffs};
use algdeg::rng::SplitMix64;
use algdeg::spectra::{analyze, criteria_check};
use algdeg::sturm::{count_real_roots, sturm_count, RationalInterval};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn poly_strategy(max_deg: usize, max_coeff: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-max_coeff..=max_coeff, 0..=max_deg + 1)
        .prop_map(|c| IntPoly::from_i64(&c))
}

fn rational_strategy() -> impl Strategy<Value = BigRational> {
    (-1000i64..=1000, 1i64..=50)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #[test]
    fn ring_laws(
        p in poly_strategy(8, 100),
        q in poly_strategy(8, 100),
        r in poly_strategy(8, 100),
    ) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &IntPoly::one(), p.clone());
        prop_assert_eq!(&p + &IntPoly::zero(), p.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        p in poly_strategy(8, 100),
        q in poly_strategy(8, 100),
        x in rational_strategy(),
    ) {
        let sum = &p + &q;
        let prod = &p * &q;
        prop_assert_eq!(sum.eval_rational(&x), p.eval_rational(&x) + q.eval_rational(&x));
        prop_assert_eq!(prod.eval_rational(&x), p.eval_rational(&x) * q.eval_rational(&x));
    }

    #[test]
    fn linear_composition_round_trips(
        p in poly_strategy(7, 60),
        b in -40i64..=40,
    ) {
        // X -> X + b then X -> X - b is the identity.
        let shifted = p.compose_linear(&BigInt::one(), &BigInt::from(b));
        let back = shifted.compose_linear(&BigInt::one(), &BigInt::from(-b));
        prop_assert_eq!(back, p);
    }

    #[test]
    fn exact_division_inverts_multiplication(
        p in poly_strategy(5, 30).prop_filter("nonzero", |p| !p.is_zero()),
        q in poly_strategy(5, 30).prop_filter("nonzero", |q| !q.is_zero()),
    ) {
        let prod = &p * &q;
        prop_assert!(prod.divisible_by(&p));
        prop_assert_eq!(prod.exact_div(&p).unwrap(), q);
    }

    #[test]
    fn real_root_count_is_bounded_and_interval_consistent(
        p in poly_strategy(7, 50).prop_filter("nonconstant", |p| !p.is_zero() && p.deg() >= 1),
    ) {
        let total = count_real_roots(&p).unwrap();
        prop_assert!(total <= p.deg());
        // Cauchy bound: all real roots lie in [-B, B].
        let b = BigRational::one()
            + BigRational::new(p.norm_inf(), p.leading().abs());
        let iv = RationalInterval::new(-b.clone(), b);
        prop_assert_eq!(sturm_count(&p, &iv).unwrap(), total);
    }

    #[test]
    fn factorization_is_certified(p in poly_strategy(5, 20).prop_filter("nonzero", |p| !p.is_zero())) {
        let f = factor(&p).unwrap();
        prop_assert_eq!(f.expand(), p);
        prop_assert!(f.content.is_positive());
        for (g, m) in &f.factors {
            prop_assert!(*m >= 1);
            prop_assert!(g.leading().is_positive());
            prop_assert!(is_irreducible(g).unwrap());
        }
    }

    #[test]
    fn graph6_round_trips(
        n in 1usize..=20,
        raw in prop::collection::vec((0usize..20, 0usize..20), 0..40),
    ) {
        let pairs: Vec<(usize, usize)> = raw
            .into_iter()
            .filter(|&(u, v)| u != v && u < n && v < n)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let g = Graph::new(n, &pairs).unwrap();
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trips(
        n in 1usize..=20,
        raw in prop::collection::vec((0usize..20, 0usize..20), 0..40),
    ) {
        let pairs: Vec<(usize, usize)> = raw
            .into_iter()
            .filter(|&(u, v)| u != v && u < n && v < n)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let g = Graph::new(n, &pairs).unwrap();
        let text = write_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn poly_text_round_trips(p in poly_strategy(8, 1000)) {
        let text = p.to_string();
        prop_assert_eq!(parse_poly(&text).unwrap(), p.clone());
        let json = poly_to_json_coeffs(&p);
        prop_assert_eq!(poly_from_json_coeffs(&json).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn spectral_invariants_on_random_graphs(seed in any::<u64>(), n in 2usize..=9) {
        let mut rng = SplitMix64::new(seed);
        let g = common::random_connected_graph(&mut rng, n);
        let r = analyze(&g);
        let c = criteria_check(&g, &r);
        prop_assert!(c.all_hold(), "criteria report: {:?}", c);
        if let Diameter::Finite(d) = r.diameter {
            prop_assert!(d + 1 <= r.distinct_count);
        }
        // Factor degrees weighted by multiplicity sum to n.
        let total: usize = r
            .factorization
            .factors
            .iter()
            .map(|(p, m)| p.deg() * *m as usize)
            .sum();
        prop_assert_eq!(total, g.n());
        prop_assert_eq!(r.char_poly, char_poly(&g));
    }

    #[test]
    fn descent_traces_validate(seed in any::<u64>(), n in 4usize..=8, every in 1usize..=4) {
        let strategy = DescentStrategy { kind: StrategyKind::UniformRandom, seed };
        let trace = run_descent(n, strategy, every).unwrap();
        prop_assert_eq!(trace.steps.len(), n * (n - 3) / 2 + 1);
        let violations = validate_trace(&trace);
        prop_assert!(violations.is_empty(), "violations: {:?}", violations);
    }

    #[test]
    fn complement_involution(
        n in 1usize..=16,
        raw in prop::collection::vec((0usize..16, 0usize..16), 0..40),
    ) {
        let pairs: Vec<(usize, usize)> = raw
            .into_iter()
            .filter(|&(u, v)| u != v && u < n && v < n)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let g = Graph::new(n, &pairs).unwrap();
        prop_assert_eq!(g.complement().complement(), g);
    }
}

mod common;

use common::{int, q};
use minexp_core::poly::cone_hypersurface;
use minexp_core::{Poly, Rational, WeightVector};
use proptest::prelude::*;

const VARS: [&str; 3] = ["x1", "x2", "x3"];

fn vars() -> Vec<String> {
    VARS.iter().map(|v| v.to_string()).collect()
}

fn coefficient() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| q(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..=4, 3), coefficient()), 0..=6)
        .prop_map(|terms| Poly::from_terms(vars(), terms).unwrap())
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn weights() -> impl Strategy<Value = WeightVector> {
    prop::collection::vec((1i64..=6, 1i64..=3), 3)
        .prop_map(|w| WeightVector::new(w.into_iter().map(|(n, d)| q(n, d)).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse(f in poly()) {
        let text = f.to_string();
        let back = Poly::parse(&text, &VARS).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn weighted_order_is_a_valuation(f in nonzero_poly(), g in nonzero_poly(), w in weights()) {
        let fg = &f * &g;
        prop_assert_eq!(
            fg.weighted_order(&w).unwrap(),
            f.weighted_order(&w).unwrap() + g.weighted_order(&w).unwrap()
        );
    }

    #[test]
    fn cone_order_splits(
        fs in prop::collection::vec(nonzero_poly(), 1..=3),
        w in weights(),
        eps in prop::collection::vec((1i64..=5, 1i64..=3), 3),
    ) {
        let eps: Vec<Rational> = eps[..fs.len()].iter().map(|&(n, d)| q(n, d)).collect();
        let g = cone_hypersurface(&fs).unwrap();
        let wy = w.extended(eps.clone()).unwrap();
        let expected = fs
            .iter()
            .zip(&eps)
            .map(|(f, e)| f.weighted_order(&w).unwrap() + e.clone())
            .min()
            .unwrap();
        prop_assert_eq!(g.weighted_order(&wy).unwrap(), expected);
    }

    #[test]
    fn homogeneous_order_is_the_degree(
        exps in prop::collection::vec(prop::collection::vec(0u32..=5, 3), 1..=5),
        coeffs in prop::collection::vec(coefficient().prop_filter("nonzero", |c| *c != int(0)), 5),
        w in weights(),
    ) {
        // keep only monomials of the weighted degree of the first one
        let target = w.degree_of(&exps[0]);
        let terms: Vec<(Vec<u32>, Rational)> = exps
            .iter()
            .zip(coeffs)
            .filter(|(e, _)| w.degree_of(e) == target)
            .map(|(e, c)| (e.clone(), c))
            .collect();
        let f = Poly::from_terms(vars(), terms).unwrap();
        prop_assume!(!f.is_zero());
        prop_assert!(f.is_homogeneous(&w).unwrap());
        prop_assert_eq!(f.weighted_order(&w).unwrap(), target);
    }
}

mod common;

use common::{alpha_min, int, q};
use minexp_core::exponent::{
    alpha_sequence, alpha_table, lct_cone, minimal_exponent_cone, normalize_degree_one, predicates,
    weighted_upper_bound, Normalized,
};
use minexp_core::poly::WeightVector;
use minexp_core::{DegreeProfile, Exponent, Rational, Rational64, Scalar, WeightedProfile};
use proptest::prelude::*;

fn sorted_degrees(max_r: usize, max_d: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1..=max_d, 1..=max_r).prop_map(|mut v| {
        v.sort_unstable();
        v
    })
}

fn rationals(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&d| int(d)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn equal_neighbours_tie(w_num in -40i64..80, w_den in 1i64..6, d in sorted_degrees(6, 9)) {
        let w = q(w_num, w_den);
        let t = alpha_sequence(&w, &rationals(&d)).unwrap();
        for i in 1..d.len() {
            if d[i - 1] == d[i] {
                prop_assert_eq!(t.alpha(i), t.alpha(i + 1));
            }
        }
    }

    #[test]
    fn strict_step_criterion(w_num in -40i64..80, w_den in 1i64..6, d in sorted_degrees(6, 9)) {
        let w = q(w_num, w_den);
        let t = alpha_sequence(&w, &rationals(&d)).unwrap();
        let mut partial = 0i64;
        for i in 1..d.len() {
            partial += d[i - 1];
            if d[i - 1] < d[i] {
                prop_assert_eq!(t.alpha(i) >= t.alpha(i + 1), int(partial) <= w);
            }
        }
    }

    #[test]
    fn difference_identity(w_num in -40i64..80, w_den in 1i64..6, d in sorted_degrees(6, 9)) {
        let w = q(w_num, w_den);
        let t = alpha_sequence(&w, &rationals(&d)).unwrap();
        let mut partial = 0i64;
        for i in 1..d.len() {
            partial += d[i - 1];
            let expected = (&w - int(partial)) * int(d[i] - d[i - 1]) / int(d[i - 1] * d[i]);
            prop_assert_eq!(t.alpha(i) - t.alpha(i + 1), expected);
        }
    }

    #[test]
    fn pivot_law(w_num in -40i64..80, w_den in 1i64..6, d in sorted_degrees(6, 9)) {
        let w = q(w_num, w_den);
        let t = alpha_sequence(&w, &rationals(&d)).unwrap();
        let (alphas, min) = alpha_min(&w, &rationals(&d));
        prop_assert_eq!(&t.alphas, &alphas);
        prop_assert_eq!(&t.minimum, &min);
        let mut partial = 0i64;
        let p = d.iter().position(|&x| { partial += x; int(partial) > w }).map_or(d.len(), |i| i + 1);
        prop_assert_eq!(t.pivot, p);
        prop_assert_eq!(t.alpha(p), &min);
    }

    #[test]
    fn weighted_specialization(n in 1usize..12, d in sorted_degrees(4, 8)) {
        prop_assume!(d.len() <= n && d[0] >= 2);
        let profile = DegreeProfile::new(n, d.iter().map(|&x| x as u32).collect()).unwrap();
        let weighted = WeightedProfile::new(WeightVector::standard(n), rationals(&d)).unwrap();
        prop_assert_eq!(weighted_upper_bound(&weighted).value, minimal_exponent_cone::<Rational>(&profile));
    }

    #[test]
    fn machine_and_big_rationals_agree(n in 1usize..30, d in sorted_degrees(8, 20)) {
        prop_assume!(d.len() <= n && d[0] >= 2);
        let profile = DegreeProfile::new(n, d.iter().map(|&x| x as u32).collect()).unwrap();
        let small = minimal_exponent_cone::<Rational64>(&profile);
        let big = minimal_exponent_cone::<Rational>(&profile);
        prop_assert_eq!(small.to_big(), big);
    }

    #[test]
    fn degree_one_shift(n in 1usize..10, ones in 0usize..4, d in sorted_degrees(3, 6)) {
        let mut all: Vec<u32> = vec![1; ones];
        all.extend(d.iter().filter(|&&x| x >= 2).map(|&x| x as u32));
        prop_assume!(!all.is_empty() && all.len() <= n);
        let rest = all.len() - ones;
        match normalize_degree_one(n, &all).unwrap() {
            Normalized::Smooth { shift } => {
                prop_assert_eq!(rest, 0);
                prop_assert_eq!(shift, ones);
            }
            Normalized::Reduced { profile, shift } => {
                prop_assert_eq!(shift, ones);
                prop_assert_eq!(profile.n(), n - ones);
                let degrees: Vec<Rational> = profile.degrees().iter().map(|&x| int(i64::from(x))).collect();
                let (_, min) = alpha_min(&int((n - ones) as i64), &degrees);
                let value = normalize_degree_one(n, &all).unwrap().minimal_exponent::<Rational>();
                prop_assert_eq!(value, Exponent::Finite(min + int(ones as i64)));
            }
        }
    }
}

#[test]
fn equal_degrees_collapse() {
    for n in 1..=12usize {
        for d in 2..=8u32 {
            for r in 1..=n.min(4) {
                let p = DegreeProfile::new(n, vec![d; r]).unwrap();
                assert_eq!(minimal_exponent_cone::<Rational>(&p), q(n as i64, i64::from(d)), "{p}");
            }
        }
    }
}

#[test]
fn predicates_match_degree_sums() {
    for p in DegreeProfile::enumerate(12, 4, 8) {
        let pr = predicates::<Rational>(&p);
        let alpha = minimal_exponent_cone::<Rational>(&p);
        let r = int(p.r() as i64);
        let sum = p.degree_sum();
        let n = p.n() as u64;
        assert_eq!(pr.rational_singularities, alpha > r, "{p}");
        assert_eq!(pr.rational_singularities, sum < n, "{p}");
        assert_eq!(pr.log_canonical, alpha >= r, "{p}");
        assert_eq!(pr.log_canonical, sum <= n, "{p}");
        assert_eq!(pr.exceeds_lct, alpha > r, "{p}");
        let lct = lct_cone::<Rational>(&p);
        assert_eq!(lct == r, pr.log_canonical, "{p}");
        assert_eq!(lct, alpha.min(r), "{p}");
    }
}

#[test]
fn alpha_table_first_entry() {
    for p in DegreeProfile::enumerate(8, 3, 6) {
        let t = alpha_table::<Rational>(&p);
        let d1 = i64::from(p.degrees()[0]);
        assert_eq!(t.alpha(1), &q(p.n() as i64, d1), "{p}");
    }
}

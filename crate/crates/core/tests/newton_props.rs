mod common;

use common::{diagonal_by_vertices, int, q};
use minexp_core::newton::{diagonal_entry, newton_exponent, weighted_order_bound};
use minexp_core::poly::WeightVector;
use minexp_core::{MonomialSupport, Poly, Rational, Rational64, Scalar};
use proptest::prelude::*;

fn points(dim: usize, max_coord: u32, max_points: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max_coord, dim), 1..=max_points)
}

fn supports() -> impl Strategy<Value = Vec<Vec<u32>>> {
    (1usize..=3).prop_flat_map(|dim| points(dim, 6, 6))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn matches_vertex_enumeration(pts in supports()) {
        let s = MonomialSupport::new(pts).unwrap();
        let d = diagonal_entry::<Rational>(&s);
        prop_assert_eq!(&d.c, &diagonal_by_vertices(s.points()));
        prop_assert!(d.verify(&s));
    }

    #[test]
    fn machine_rationals_agree(pts in supports()) {
        let s = MonomialSupport::new(pts).unwrap();
        let small = diagonal_entry::<Rational64>(&s);
        prop_assert!(small.verify(&s));
        prop_assert_eq!(small.c.to_big(), diagonal_entry::<Rational>(&s).c);
    }

    #[test]
    fn adding_a_point_never_increases(pts in supports(), extra in prop::collection::vec(0u32..=6, 3)) {
        let s = MonomialSupport::new(pts.clone()).unwrap();
        let mut more = pts;
        more.push(extra[..s.dim()].to_vec());
        let t = MonomialSupport::new(more).unwrap();
        prop_assert!(diagonal_entry::<Rational>(&t).c <= diagonal_entry::<Rational>(&s).c);
    }

    #[test]
    fn scaling(pts in supports(), m in 1u32..5) {
        let s = MonomialSupport::new(pts.clone()).unwrap();
        let scaled: Vec<Vec<u32>> = pts.iter().map(|p| p.iter().map(|e| e * m).collect()).collect();
        let t = MonomialSupport::new(scaled).unwrap();
        prop_assert_eq!(
            diagonal_entry::<Rational>(&t).c,
            diagonal_entry::<Rational>(&s).c * int(i64::from(m))
        );
    }

    #[test]
    fn weighted_degree_floor(pts in supports(), w in prop::collection::vec(1i64..7, 3)) {
        let s = MonomialSupport::new(pts).unwrap();
        let w = &w[..s.dim()];
        let floor = s
            .points()
            .iter()
            .map(|u| u.iter().zip(w).map(|(&e, &x)| i64::from(e) * x).sum::<i64>())
            .min()
            .unwrap();
        let c = diagonal_entry::<Rational>(&s).c;
        prop_assert!(c * int(w.iter().sum()) >= int(floor));
    }
}

#[test]
fn cusp_against_weighted_bound() {
    let s = MonomialSupport::new(vec![vec![2, 0], vec![0, 3]]).unwrap();
    let (e, diag) = newton_exponent::<Rational>(&s).unwrap();
    assert_eq!(e.value, q(5, 6));
    assert!(diag.verify(&s));
    let f = Poly::parse("x1^2 + x2^3", &["x1", "x2"]).unwrap();
    let w = WeightVector::from_ints(&[3, 2]).unwrap();
    assert_eq!(weighted_order_bound(&f, &w).unwrap().value, e.value);
}

#[test]
fn oracle_sanity() {
    assert_eq!(diagonal_by_vertices(&[vec![2, 0], vec![0, 3]]), q(6, 5));
    assert_eq!(diagonal_by_vertices(&[vec![1, 1]]), int(1));
    assert_eq!(diagonal_by_vertices(&[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]), q(2, 3));
    assert_eq!(diagonal_by_vertices(&[vec![5]]), int(5));
}

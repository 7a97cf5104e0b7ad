//! Property tests for the numeric kernel: classical inner-product identities
//! that every downstream bound silently relies on.

use proptest::collection::vec;
use proptest::prelude::*;

use revineq::space::{inner, norm, Field, Vector};

fn coord() -> impl Strategy<Value = f64> {
    -100.0..100.0f64
}

fn complex_vector(dim: usize) -> impl Strategy<Value = Vector> {
    vec((coord(), coord()), dim).prop_map(|cs| {
        let pairs: Vec<[f64; 2]> = cs.iter().map(|(re, im)| [*re, *im]).collect();
        Vector::from_pairs(&pairs).unwrap()
    })
}

fn pair(max_dim: usize) -> impl Strategy<Value = (Vector, Vector)> {
    (1..=max_dim).prop_flat_map(|d| (complex_vector(d), complex_vector(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn cauchy_schwarz((x, y) in pair(16)) {
        let ip = inner(&x, &y).unwrap();
        prop_assert!(ip.norm() <= norm(&x) * norm(&y) + 1e-9 * (1.0 + norm(&x) * norm(&y)));
    }

    #[test]
    fn conjugate_symmetry((x, y) in pair(16)) {
        let xy = inner(&x, &y).unwrap();
        let yx = inner(&y, &x).unwrap();
        prop_assert!((xy - yx.conj()).norm() <= 1e-9 * (1.0 + xy.norm()));
    }

    #[test]
    fn parallelogram_law((x, y) in pair(16)) {
        let sum = x.add(&y).unwrap();
        let diff = x.sub(&y).unwrap();
        let lhs = norm(&sum).powi(2) + norm(&diff).powi(2);
        let rhs = 2.0 * norm(&x).powi(2) + 2.0 * norm(&y).powi(2);
        prop_assert!((lhs - rhs).abs() <= 1e-8 * (1.0 + rhs));
    }

    #[test]
    fn forward_triangle((x, y) in pair(16)) {
        let sum = x.add(&y).unwrap();
        prop_assert!(norm(&sum) <= norm(&x) + norm(&y) + 1e-9);
    }

    #[test]
    fn schwarz_numerator_nonnegative((x, y) in pair(16)) {
        let numerator = norm(&x) * norm(&y) - inner(&x, &y).unwrap().re;
        prop_assert!(numerator >= -1e-12 * (1.0 + norm(&x) * norm(&y)));
    }

    #[test]
    fn norm_homogeneity(x in (1usize..=8).prop_flat_map(complex_vector), lambda in -10.0..10.0f64) {
        let scaled = x.scale(lambda);
        prop_assert!((norm(&scaled) - lambda.abs() * norm(&x)).abs() <= 1e-9 * (1.0 + norm(&x)));
    }
}

#[test]
fn real_field_rejects_imaginary_parts() {
    assert!(Vector::new(vec![revineq::Scalar::new(1.0, 0.5)], Field::Real).is_err());
}

//! Randomized properties of the bound coefficients and constraint forms:
//! coefficient ranges under membership, scale invariance, and the agreement
//! of the two ball-membership formulations.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use revineq::bounds::{alpha_ball, alpha_disk, thm25_evaluate};
use revineq::constraints::{ball_margin, ball_margin_equiv, Axis, BallConstraint, DiskConstraint};
use revineq::space::{Field, Tolerance, UnitVector, VectorFamily};
use revineq::witnesses::{
    sample_in_ball, sample_in_disk, sample_zero_sum, SampleConstraint, SampleSpec, Seed,
};

fn tol() -> Tolerance {
    Tolerance::default()
}

fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

fn random_disk_family(rng: &mut ChaCha12Rng, index: u64) -> (VectorFamily, DiskConstraint) {
    let dim = rng.random_range(1..=8);
    let n = rng.random_range(1..=6);
    let field = if rng.random() { Field::Complex } else { Field::Real };
    let a = UnitVector::basis(dim, 0, field).unwrap();
    let r: f64 = rng.random_range(0.5..2.0);
    let s: f64 = rng.random_range(0.5..2.0);
    let p = s * rng.random_range(0.05..1.0);
    let c = DiskConstraint::new(r, s, p, Axis::RealAxis, a).unwrap();
    let spec = SampleSpec {
        dim,
        n,
        field,
        constraint: SampleConstraint::Disk(c.clone()),
        seed: Seed::new(index),
    };
    (sample_in_disk(&spec, &tol()).unwrap(), c)
}

#[test]
fn alpha_disk_bounded_by_one_under_membership() {
    let mut rng = rng(101);
    for index in 0..2000 {
        let (family, c) = random_disk_family(&mut rng, index);
        let alpha = alpha_disk(&family, &c);
        assert!(alpha <= 1.0 + 1e-12, "alpha = {alpha}");
        assert!(alpha > 0.0, "strict p-feasibility (p ≤ s) forces alpha > 0");
    }
}

#[test]
fn alpha_disk_is_scale_invariant() {
    let mut rng = rng(202);
    for index in 0..1000 {
        let (family, c) = random_disk_family(&mut rng, index);
        let lambda: f64 = rng.random_range(0.1..10.0);
        let scaled = DiskConstraint::new(
            lambda * c.r,
            lambda * c.s,
            lambda * c.p,
            Axis::RealAxis,
            c.anchor.clone(),
        )
        .unwrap();
        let a0 = alpha_disk(&family, &c);
        let a1 = alpha_disk(&family, &scaled);
        assert!((a0 - a1).abs() <= 1e-12 * (1.0 + a0.abs()));
    }
}

#[test]
fn alpha_ball_bounded_by_one_with_equality_at_endpoints() {
    let mut rng = rng(303);
    for index in 0..2000 {
        let dim = rng.random_range(1..=8);
        let n = rng.random_range(1..=6);
        let field = if rng.random() { Field::Complex } else { Field::Real };
        let a = UnitVector::basis(dim, 0, field).unwrap();
        let m: f64 = rng.random_range(0.2..1.0);
        let big = m + rng.random_range(0.0..2.0);
        let c = BallConstraint::new(m, big, Axis::RealAxis, a.clone()).unwrap();
        let spec = SampleSpec {
            dim,
            n,
            field,
            constraint: SampleConstraint::Ball(c),
            seed: Seed::new(index),
        };
        let family = sample_in_ball(&spec, &tol()).unwrap();
        assert!(alpha_ball(&family, m, big) <= 1.0 + 1e-12);

        // equality exactly at member norms m and M
        let boundary = VectorFamily::new(vec![a.as_vector().scale(m)], &tol()).unwrap();
        assert!((alpha_ball(&boundary, m, big) - 1.0).abs() <= 1e-12);
        let boundary = VectorFamily::new(vec![a.as_vector().scale(big)], &tol()).unwrap();
        assert!((alpha_ball(&boundary, m, big) - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn ball_margin_signs_agree_between_forms() {
    let mut rng = rng(404);
    let mut checked = 0;
    for index in 0..10_000 {
        let dim = rng.random_range(1..=6);
        let field = if rng.random() { Field::Complex } else { Field::Real };
        let a = UnitVector::basis(dim, 0, field).unwrap();
        let m: f64 = rng.random_range(0.2..1.5);
        let big = m + rng.random_range(0.0..2.0);
        let c = BallConstraint::new(m, big, Axis::RealAxis, a.clone()).unwrap();
        // points both inside and outside: sample a larger enclosing ball
        let loose = BallConstraint::new(0.05, m + 4.0, Axis::RealAxis, a).unwrap();
        let spec = SampleSpec {
            dim,
            n: 1,
            field,
            constraint: SampleConstraint::Ball(loose),
            seed: Seed::new(index),
        };
        let x = sample_in_ball(&spec, &tol()).unwrap().members()[0].clone();
        let quad = ball_margin(&x, &c).unwrap().value;
        let equiv = ball_margin_equiv(&x, &c).unwrap().value;
        if quad.abs() > 1e-9 && equiv.abs() > 1e-9 {
            assert_eq!(
                quad > 0.0,
                equiv > 0.0,
                "sign disagreement at margin {quad} vs {equiv}"
            );
            checked += 1;
        }
    }
    assert!(checked > 5000, "too few decisive samples: {checked}");
}

#[test]
fn zero_sum_bound_never_violated() {
    let mut rng = rng(505);
    for index in 0..1000 {
        let dim = rng.random_range(1..=8);
        let n = rng.random_range(2..=8);
        let field = if rng.random() { Field::Complex } else { Field::Real };
        let a = UnitVector::basis(dim, 0, field).unwrap();
        let r: f64 = rng.random_range(0.3..2.0);
        let s: f64 = rng.random_range(0.3..2.0);
        let family =
            sample_zero_sum(dim, n, field, rng.random_range(0.2..2.0), Seed::new(index), &tol())
                .unwrap();
        let rep = thm25_evaluate(&family, r, s, &a, &tol()).unwrap();
        assert!(rep.hypotheses_ok);
        assert!(rep.slack >= -1e-9, "slack {}", rep.slack);
    }
}

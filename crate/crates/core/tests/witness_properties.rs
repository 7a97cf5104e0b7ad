//! Bulk properties of the constrained samplers: membership, determinism,
//! and a uniformity smoke test against the analytic mean radius of the
//! uniform ball distribution.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use revineq::constraints::{ball_margin, ball_margin_equiv, disk_margin, Axis, BallConstraint, DiskConstraint};
use revineq::space::{norm, Field, Tolerance, UnitVector};
use revineq::witnesses::{
    sample_in_ball, sample_in_disk, SampleConstraint, SampleSpec, Seed,
};

fn tol() -> Tolerance {
    Tolerance::default()
}

#[test]
fn disk_membership_holds_in_bulk() {
    let mut rng = ChaCha12Rng::seed_from_u64(1);
    for index in 0..1000 {
        let dim = rng.random_range(1..=16);
        let field = if rng.random() { Field::Complex } else { Field::Real };
        let a = UnitVector::basis(dim, 0, field).unwrap();
        let r: f64 = rng.random_range(0.5..2.0);
        let s: f64 = rng.random_range(0.5..2.0);
        let p: f64 = rng.random_range(0.01..2.0);
        let c = DiskConstraint::new(r, s, p, Axis::RealAxis, a).unwrap();
        let spec = SampleSpec {
            dim,
            n: 10,
            field,
            constraint: SampleConstraint::Disk(c.clone()),
            seed: Seed::new(index),
        };
        let fam = sample_in_disk(&spec, &tol()).unwrap();
        for x in fam.members() {
            assert!(disk_margin(x, &c).unwrap().value >= -1e-12);
        }
    }
}

#[test]
fn ball_membership_holds_in_bulk() {
    let mut rng = ChaCha12Rng::seed_from_u64(2);
    for index in 0..1000 {
        let dim = rng.random_range(1..=16);
        let field = if rng.random() { Field::Complex } else { Field::Real };
        let a = UnitVector::basis(dim, 0, field).unwrap();
        let m: f64 = rng.random_range(0.1..1.0);
        let big = m + rng.random_range(0.0..3.0);
        let c = BallConstraint::new(m, big, Axis::RealAxis, a).unwrap();
        let spec = SampleSpec {
            dim,
            n: 10,
            field,
            constraint: SampleConstraint::Ball(c.clone()),
            seed: Seed::new(index),
        };
        let fam = sample_in_ball(&spec, &tol()).unwrap();
        for x in fam.members() {
            assert!(ball_margin(x, &c).unwrap().value >= -1e-9);
            assert!(ball_margin_equiv(x, &c).unwrap().value >= -1e-12);
        }
    }
}

#[test]
fn sampling_is_bit_exact_across_runs() {
    let a = UnitVector::basis(5, 0, Field::Complex).unwrap();
    let c = DiskConstraint::new(1.3, 0.8, 0.6, Axis::RealAxis, a).unwrap();
    let spec = SampleSpec {
        dim: 5,
        n: 20,
        field: Field::Complex,
        constraint: SampleConstraint::Disk(c),
        seed: Seed::new(987),
    };
    let one = sample_in_disk(&spec, &tol()).unwrap();
    let two = sample_in_disk(&spec, &tol()).unwrap();
    let a_json = serde_json::to_string(&one).unwrap();
    let b_json = serde_json::to_string(&two).unwrap();
    assert_eq!(a_json, b_json);
}

/// Mean of ‖x − center‖/R for the uniform distribution on a D-ball is
/// D/(D+1); in real dimension 2 that is 2/3.
#[test]
fn disk_sampling_uniformity_smoke_test() {
    let a = UnitVector::basis(2, 0, Field::Real).unwrap();
    let c = DiskConstraint::new(1.0, 1.0, 1.0, Axis::RealAxis, a.clone()).unwrap();
    let spec = SampleSpec {
        dim: 2,
        n: 100_000,
        field: Field::Real,
        constraint: SampleConstraint::Disk(c.clone()),
        seed: Seed::new(2024),
    };
    let fam = sample_in_disk(&spec, &tol()).unwrap();
    let center = c.center().unwrap();
    let mean: f64 = fam
        .members()
        .iter()
        .map(|x| norm(&x.sub(&center).unwrap()) / c.radius())
        .sum::<f64>()
        / fam.len() as f64;
    assert!(
        (mean - 2.0 / 3.0).abs() < 0.01,
        "mean normalized radius {mean} deviates from 2/3"
    );
}

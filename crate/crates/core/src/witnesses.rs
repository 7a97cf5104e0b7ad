//! Seeded constrained samplers, projections onto the constraint sets, and
//! constructors of exact equality cases.
//!
//! All sampling is deterministic given a [`Seed`]: member `k` of a family is
//! drawn from ChaCha12 substream `k`, so families are reproducible bit-exactly
//! and members could be generated concurrently without changing the output.

use rand::Rng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::constraints::{ball_margin_equiv, disk_margin, Axis, BallConstraint, DiskConstraint};
use crate::rng::{derive_seed, substream};
use crate::space::{
    inner, norm, Field, Scalar, Tolerance, UnitVector, Vector, VectorFamily,
};
use crate::{Error, Result};

/// 64-bit sampler seed. Any value is valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed {
    pub value: u64,
}

impl Seed {
    pub fn new(value: u64) -> Self {
        Seed { value }
    }

    /// Child seed for restart / sweep-cell / per-family index `index`.
    pub fn derive(&self, index: u64) -> Seed {
        Seed::new(derive_seed(self.value, index))
    }
}

/// The constraint set a [`SampleSpec`] draws from.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleConstraint {
    Disk(DiskConstraint),
    Ball(BallConstraint),
}

/// A sampling request: `n` vectors of dimension `dim` over `field`,
/// uniformly distributed in the given constraint set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleSpec {
    pub dim: usize,
    pub n: usize,
    pub field: Field,
    pub constraint: SampleConstraint,
    pub seed: Seed,
}

const MAX_ATTEMPTS: u32 = 1000;

fn check_spec(spec: &SampleSpec, anchor: &UnitVector) -> Result<()> {
    if spec.dim == 0 {
        return Err(Error::EmptyVector);
    }
    if spec.n == 0 {
        return Err(Error::EmptyFamily);
    }
    if anchor.dim() != spec.dim {
        return Err(Error::DimensionMismatch(spec.dim, anchor.dim()));
    }
    if anchor.field() != spec.field {
        return Err(Error::FieldMismatch(spec.field, anchor.field()));
    }
    Ok(())
}

/// One Gaussian coordinate vector, used as an isotropic direction.
pub(crate) fn gaussian_vector(rng: &mut ChaCha12Rng, dim: usize, field: Field) -> Vector {
    let coords = (0..dim)
        .map(|_| match field {
            Field::Real => Scalar::new(rng.sample(StandardNormal), 0.0),
            Field::Complex => {
                Scalar::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
            }
        })
        .collect();
    Vector::new(coords, field).expect("gaussian coordinates are finite")
}

/// Uniform point in the ball of the given center and radius.
///
/// Direction is a normalized Gaussian, the radius is scaled by `u^{1/D}`
/// with `D` the real dimension (complex coordinates count twice), which
/// together give the exact uniform distribution on the ball.
pub(crate) fn sample_ball_point(
    rng: &mut ChaCha12Rng,
    center: &Vector,
    radius: f64,
    dim: usize,
    field: Field,
) -> Result<Vector> {
    let real_dim = match field {
        Field::Real => dim,
        Field::Complex => 2 * dim,
    };
    let mut direction = gaussian_vector(rng, dim, field);
    let mut guard = 0;
    while norm(&direction) == 0.0 {
        direction = gaussian_vector(rng, dim, field);
        guard += 1;
        if guard > MAX_ATTEMPTS {
            return Err(Error::SamplingExhausted(MAX_ATTEMPTS));
        }
    }
    let u: f64 = rng.random();
    let scale = radius * u.powf(1.0 / real_dim as f64) / norm(&direction);
    center.add(&direction.scale(scale))
}

fn sample_family_in_ball(
    spec: &SampleSpec,
    center: &Vector,
    radius: f64,
    tol: &Tolerance,
) -> Result<VectorFamily> {
    let mut members = Vec::with_capacity(spec.n);
    for k in 0..spec.n {
        let mut rng = substream(spec.seed.value, k as u64);
        let mut attempts = 0;
        let member = loop {
            let x = sample_ball_point(&mut rng, center, radius, spec.dim, spec.field)?;
            if !x.is_zero(tol.nonzero) {
                break x;
            }
            attempts += 1;
            if attempts >= MAX_ATTEMPTS {
                return Err(Error::SamplingExhausted(MAX_ATTEMPTS));
            }
        };
        members.push(member);
    }
    VectorFamily::new(members, tol)
}

/// `n` vectors uniform in the disk set `{x : ‖rx − s·axis(a)‖ ≤ p}`.
pub fn sample_in_disk(spec: &SampleSpec, tol: &Tolerance) -> Result<VectorFamily> {
    let c = match &spec.constraint {
        SampleConstraint::Disk(c) => c,
        SampleConstraint::Ball(_) => {
            return Err(Error::InvalidParameter(
                "sample_in_disk requires a disk constraint".into(),
            ))
        }
    };
    check_spec(spec, &c.anchor)?;
    sample_family_in_ball(spec, &c.center()?, c.radius(), tol)
}

/// `n` vectors uniform in the ball `‖x − ((m+M)/2)·axis(a)‖ ≤ (M−m)/2`.
pub fn sample_in_ball(spec: &SampleSpec, tol: &Tolerance) -> Result<VectorFamily> {
    let c = match &spec.constraint {
        SampleConstraint::Ball(c) => c,
        SampleConstraint::Disk(_) => {
            return Err(Error::InvalidParameter(
                "sample_in_ball requires a ball constraint".into(),
            ))
        }
    };
    check_spec(spec, &c.anchor)?;
    sample_family_in_ball(spec, &c.center()?, c.radius(), tol)
}

/// `n ≥ 2` nonzero vectors with exactly zero sum: `n − 1` uniform draws of
/// norm ≤ `scale`, the last member their negated sum.
pub fn sample_zero_sum(
    dim: usize,
    n: usize,
    field: Field,
    scale: f64,
    seed: Seed,
    tol: &Tolerance,
) -> Result<VectorFamily> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "zero-sum sampling requires n ≥ 2".into(),
        ));
    }
    if !scale.is_finite() || scale <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "scale must be finite and positive, got {scale}"
        )));
    }
    let origin = Vector::zero(dim, field)?;
    for attempt in 0..MAX_ATTEMPTS {
        let base = seed.derive(attempt as u64);
        let mut members = Vec::with_capacity(n);
        let mut ok = true;
        for k in 0..n - 1 {
            let mut rng = substream(base.value, k as u64);
            let x = sample_ball_point(&mut rng, &origin, scale, dim, field)?;
            if x.is_zero(tol.nonzero) {
                ok = false;
                break;
            }
            members.push(x);
        }
        if !ok {
            continue;
        }
        let mut sum = origin.clone();
        for x in &members {
            sum = sum.add(x)?;
        }
        let last = sum.scale(-1.0);
        if last.is_zero(tol.nonzero) {
            continue;
        }
        members.push(last);
        return VectorFamily::new(members, tol);
    }
    Err(Error::SamplingExhausted(MAX_ATTEMPTS))
}

/// Nearest point of the disk set: `x` itself when feasible, otherwise the
/// radial projection onto the boundary sphere.
pub fn project_to_disk(x: &Vector, c: &DiskConstraint) -> Result<Vector> {
    if disk_margin(x, c)?.value >= 0.0 {
        return Ok(x.clone());
    }
    let center = c.center()?;
    let offset = x.sub(&center)?;
    center.add(&offset.scale(c.radius() / norm(&offset)))
}

/// Nearest point of the equivalent-form ball `‖x − center‖ ≤ (M−m)/2`.
pub fn project_to_ball(x: &Vector, c: &BallConstraint) -> Result<Vector> {
    if ball_margin_equiv(x, c)?.value >= 0.0 {
        return Ok(x.clone());
    }
    let center = c.center()?;
    let offset = x.sub(&center)?;
    if norm(&offset) == 0.0 {
        return Ok(center);
    }
    center.add(&offset.scale(c.radius() / norm(&offset)))
}

/// Which boundary point of the disk an equality family sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// `λ = (s+p)/r`, the far boundary point along the anchor.
    Outer,
    /// `λ = (s−p)/r`, the near boundary point; requires `p < s`.
    Inner,
}

/// `n` copies of `λ·a` on the disk boundary, where the single-disk bound is
/// an equality (the boundary forces `α_{r,s} = 1`).
pub fn equality_family_thm24(
    a: &UnitVector,
    c: &DiskConstraint,
    n: usize,
    branch: Branch,
    tol: &Tolerance,
) -> Result<VectorFamily> {
    if n == 0 {
        return Err(Error::EmptyFamily);
    }
    if a.dim() != c.anchor.dim() || a.field() != c.anchor.field() {
        return Err(Error::DimensionMismatch(a.dim(), c.anchor.dim()));
    }
    let lambda = match branch {
        Branch::Outer => (c.s + c.p) / c.r,
        Branch::Inner => {
            if c.p >= c.s {
                return Err(Error::Infeasible(format!(
                    "inner boundary point requires p < s, got p = {}, s = {}",
                    c.p, c.s
                )));
            }
            (c.s - c.p) / c.r
        }
    };
    let member = a.as_vector().scale(lambda);
    VectorFamily::new(vec![member; n], tol)
}

/// `n` copies of `(1+i)·a` with the unit constraints `r = r′ = s = s′ = p =
/// q = 1`, where the two-disk bound is an exact equality with
/// `α = β = 1/√2`.
pub fn equality_family_thm22(
    a: &UnitVector,
    n: usize,
    tol: &Tolerance,
) -> Result<(VectorFamily, DiskConstraint, DiskConstraint)> {
    if n == 0 {
        return Err(Error::EmptyFamily);
    }
    if a.field() != Field::Complex {
        return Err(Error::RealFieldImagAxis);
    }
    let member = a.as_vector().scale_scalar(Scalar::new(1.0, 1.0))?;
    let family = VectorFamily::new(vec![member; n], tol)?;
    let c_real = DiskConstraint::new(1.0, 1.0, 1.0, Axis::RealAxis, a.clone())?;
    let c_imag = DiskConstraint::new(1.0, 1.0, 1.0, Axis::ImagAxis, a.clone())?;
    Ok((family, c_real, c_imag))
}

/// `n` copies of the unit vector at angle `arccos(rho)` to `a`, so the
/// Diaz–Metcalf coefficient is exactly `rho`; equality holds iff `rho = 1`.
pub fn equality_family_dm(
    a: &UnitVector,
    rho: f64,
    n: usize,
    tol: &Tolerance,
) -> Result<VectorFamily> {
    if n == 0 {
        return Err(Error::EmptyFamily);
    }
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::InvalidParameter(format!(
            "rho must lie in [0, 1], got {rho}"
        )));
    }
    let member = if rho == 1.0 {
        a.as_vector().clone()
    } else {
        if a.dim() < 2 {
            return Err(Error::InvalidParameter(
                "rho < 1 requires dimension ≥ 2".into(),
            ));
        }
        let b = orthogonal_unit(a, tol)?;
        a.as_vector()
            .scale(rho)
            .add(&b.scale((1.0 - rho * rho).sqrt()))?
    };
    VectorFamily::new(vec![member; n], tol)
}

/// A unit vector orthogonal to `a`, by Gram–Schmidt against the standard
/// basis vector with the smallest overlap.
fn orthogonal_unit(a: &UnitVector, tol: &Tolerance) -> Result<Vector> {
    let mut best = 0;
    let mut best_overlap = f64::INFINITY;
    for j in 0..a.dim() {
        let overlap = a.as_vector().coords()[j].norm();
        if overlap < best_overlap {
            best_overlap = overlap;
            best = j;
        }
    }
    let e = Vector::basis(a.dim(), best, a.field())?;
    let coeff = inner(&e, a.as_vector())?;
    let b = e.sub(&a.as_vector().scale_scalar(coeff)?)?;
    let n = norm(&b);
    if n <= tol.nonzero {
        return Err(Error::ZeroVector);
    }
    Ok(b.scale(1.0 / n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{dm_evaluate, thm22_evaluate, thm24_evaluate};
    use crate::constraints::ball_margin;
    use crate::space::family_sum;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn anchor(dim: usize, field: Field) -> UnitVector {
        UnitVector::basis(dim, 0, field).unwrap()
    }

    fn disk_spec(dim: usize, n: usize, field: Field, p: f64, seed: u64) -> SampleSpec {
        let a = anchor(dim, field);
        SampleSpec {
            dim,
            n,
            field,
            constraint: SampleConstraint::Disk(
                DiskConstraint::new(1.0, 1.0, p, Axis::RealAxis, a).unwrap(),
            ),
            seed: Seed::new(seed),
        }
    }

    #[test]
    fn disk_samples_are_members() {
        for field in [Field::Real, Field::Complex] {
            let spec = disk_spec(3, 8, field, 0.9, 7);
            let fam = sample_in_disk(&spec, &tol()).unwrap();
            let c = match &spec.constraint {
                SampleConstraint::Disk(c) => c.clone(),
                _ => unreachable!(),
            };
            for x in fam.members() {
                assert!(disk_margin(x, &c).unwrap().value >= -1e-12);
            }
        }
    }

    #[test]
    fn disk_sampling_is_deterministic() {
        let spec = disk_spec(4, 5, Field::Complex, 0.5, 123);
        let a = sample_in_disk(&spec, &tol()).unwrap();
        let b = sample_in_disk(&spec, &tol()).unwrap();
        assert_eq!(a.members().len(), b.members().len());
        for (x, y) in a.members().iter().zip(b.members()) {
            assert_eq!(x.coords(), y.coords());
        }
        let mut other = spec.clone();
        other.seed = Seed::new(124);
        let c = sample_in_disk(&other, &tol()).unwrap();
        assert_ne!(a.members()[0].coords(), c.members()[0].coords());
    }

    #[test]
    fn tiny_radius_concentrates_at_center() {
        let spec = disk_spec(2, 4, Field::Real, 1e-9, 5);
        let fam = sample_in_disk(&spec, &tol()).unwrap();
        let a = anchor(2, Field::Real);
        for x in fam.members() {
            assert!(norm(&x.sub(a.as_vector()).unwrap()) <= 1e-9 + 1e-15);
        }
    }

    #[test]
    fn ball_samples_satisfy_both_forms() {
        let a = anchor(3, Field::Complex);
        let c = BallConstraint::new(0.5, 2.5, Axis::RealAxis, a.clone()).unwrap();
        let spec = SampleSpec {
            dim: 3,
            n: 16,
            field: Field::Complex,
            constraint: SampleConstraint::Ball(c.clone()),
            seed: Seed::new(11),
        };
        let fam = sample_in_ball(&spec, &tol()).unwrap();
        for x in fam.members() {
            assert!(ball_margin(x, &c).unwrap().value >= -1e-9);
            assert!(ball_margin_equiv(x, &c).unwrap().value >= -1e-12);
        }
    }

    #[test]
    fn degenerate_ball_returns_center() {
        let a = anchor(2, Field::Real);
        let c = BallConstraint::new(2.0, 2.0, Axis::RealAxis, a.clone()).unwrap();
        let spec = SampleSpec {
            dim: 2,
            n: 3,
            field: Field::Real,
            constraint: SampleConstraint::Ball(c),
            seed: Seed::new(1),
        };
        let fam = sample_in_ball(&spec, &tol()).unwrap();
        for x in fam.members() {
            assert!(norm(&x.sub(&a.as_vector().scale(2.0)).unwrap()) < 1e-15);
        }
    }

    #[test]
    fn zero_sum_families_sum_to_zero() {
        for n in [2, 5] {
            let fam =
                sample_zero_sum(3, n, Field::Complex, 1.0, Seed::new(9), &tol()).unwrap();
            assert_eq!(fam.len(), n);
            assert!(norm(&family_sum(&fam)) <= 1e-10);
            for x in fam.members() {
                assert!(!x.is_zero(1e-12));
            }
        }
        // n = 2 is forced to {v, -v}
        let fam = sample_zero_sum(2, 2, Field::Real, 1.0, Seed::new(3), &tol()).unwrap();
        let sum = fam.members()[0].add(&fam.members()[1]).unwrap();
        assert!(norm(&sum) == 0.0);
    }

    #[test]
    fn projection_is_radial_and_idempotent() {
        let a = anchor(2, Field::Real);
        let c = DiskConstraint::new(1.0, 1.0, 0.5, Axis::RealAxis, a.clone()).unwrap();
        // inside: unchanged
        let inside = a.as_vector().scale(1.2);
        assert_eq!(
            project_to_disk(&inside, &c).unwrap().coords(),
            inside.coords()
        );
        // outside at distance 2·radius: lands on the boundary
        let outside = a.as_vector().scale(2.0);
        let proj = project_to_disk(&outside, &c).unwrap();
        assert!(norm(&proj.sub(&a.as_vector().scale(1.5)).unwrap()) < 1e-12);
        let again = project_to_disk(&proj, &c).unwrap();
        assert!(norm(&again.sub(&proj).unwrap()) < 1e-12);
        assert!(disk_margin(&proj, &c).unwrap().value >= -1e-12);
    }

    #[test]
    fn thm24_equality_families_verify() {
        let a = anchor(3, Field::Real);
        let c = DiskConstraint::new(1.0, 1.0, 1.0, Axis::RealAxis, a.clone()).unwrap();
        let fam = equality_family_thm24(&a, &c, 2, Branch::Outer, &tol()).unwrap();
        let rep = thm24_evaluate(&fam, &c, &tol()).unwrap();
        assert!((rep.lhs - 4.0).abs() < 1e-12);
        assert!(rep.equality.unwrap().holds);

        let c2 = DiskConstraint::new(1.0, 2.0, 1.0, Axis::RealAxis, a.clone()).unwrap();
        let fam = equality_family_thm24(&a, &c2, 3, Branch::Inner, &tol()).unwrap();
        let rep = thm24_evaluate(&fam, &c2, &tol()).unwrap();
        assert!((rep.coefficients["alpha_rs"] - 1.0).abs() < 1e-12);
        assert!(rep.equality.unwrap().holds);

        // inner branch is invalid at p = s
        assert!(equality_family_thm24(&a, &c, 1, Branch::Inner, &tol()).is_err());
    }

    #[test]
    fn thm22_equality_families_verify() {
        let a = anchor(2, Field::Complex);
        for n in [1, 3] {
            let (fam, cr, ci) = equality_family_thm22(&a, n, &tol()).unwrap();
            let rep = thm22_evaluate(&fam, &cr, &ci, &tol()).unwrap();
            assert!((rep.lhs - n as f64 * 2.0_f64.sqrt()).abs() < 1e-12);
            let eq = rep.equality.unwrap();
            assert!(eq.holds);
            assert!(eq.residual <= 1e-10);
        }
    }

    #[test]
    fn dm_equality_families() {
        let a = anchor(2, Field::Real);
        let fam = equality_family_dm(&a, 1.0, 2, &tol()).unwrap();
        let rep = dm_evaluate(&fam, &a, &tol()).unwrap();
        assert!(rep.equality.unwrap().holds);

        let fam = equality_family_dm(&a, 0.0, 1, &tol()).unwrap();
        let rep = dm_evaluate(&fam, &a, &tol()).unwrap();
        assert!(rep.lhs.abs() < 1e-12);

        let rho = 1.0 / 2.0_f64.sqrt();
        let fam = equality_family_dm(&a, rho, 2, &tol()).unwrap();
        let rep = dm_evaluate(&fam, &a, &tol()).unwrap();
        assert!((rep.lhs - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!((rep.rhs - 2.0).abs() < 1e-12);
        assert!(!rep.equality.unwrap().holds);

        // rho < 1 impossible in dimension 1
        let a1 = anchor(1, Field::Real);
        assert!(equality_family_dm(&a1, 0.5, 1, &tol()).is_err());
    }
}

//! Randomized hypothesis-satisfying instance generators, one per inequality.
//!
//! Every generator draws dimension, family size, field (where admissible) and
//! constraint parameters from a seeded stream and constructs a configuration
//! whose hypotheses hold by construction, so large soundness sweeps can assert
//! `hypotheses_ok && slack ≥ −tol` on every report. Paired generators expose
//! the same underlying instance through both a corollary and the theorem it
//! specializes, for cross-checking the specialization identities.

use rand::Rng;
use rand_chacha::ChaCha12Rng;

use crate::bounds::{
    cor23_evaluate, cor29_evaluate, cor32_evaluate, cor33_evaluate, dm_evaluate,
    schwarz31_evaluate, thm210_evaluate, thm21_evaluate, thm22_evaluate, thm24_evaluate,
    thm25_evaluate, thm26_evaluate, thm27_evaluate, thm28_evaluate, BoundReport,
    CoefficientPairs, RadiiList, TheoremId,
};
use crate::constraints::{Axis, BallConstraint, DiskConstraint};
use crate::rng::{derive_seed, substream};
use crate::space::{
    inner, norm, Field, OrthonormalFrame, Scalar, Tolerance, UnitVector, Vector, VectorFamily,
};
use crate::witnesses::{
    gaussian_vector, sample_ball_point, sample_in_ball, sample_in_disk, sample_zero_sum,
    SampleConstraint, SampleSpec, Seed,
};
use crate::{Error, Result};

fn rng_for(id: TheoremId, seed: u64, index: u64) -> ChaCha12Rng {
    let ordinal = TheoremId::ALL.iter().position(|t| *t == id).unwrap() as u64;
    substream(derive_seed(seed, ordinal), index)
}

fn random_field(rng: &mut ChaCha12Rng) -> Field {
    if rng.random::<bool>() {
        Field::Complex
    } else {
        Field::Real
    }
}

fn random_dims(rng: &mut ChaCha12Rng) -> (usize, usize) {
    (rng.random_range(1..=16), rng.random_range(1..=8))
}

fn random_unit(rng: &mut ChaCha12Rng, dim: usize, field: Field, tol: &Tolerance) -> UnitVector {
    loop {
        let g = gaussian_vector(rng, dim, field);
        if let Ok(u) = UnitVector::normalize(&g, tol) {
            return u;
        }
    }
}

fn random_frame(
    rng: &mut ChaCha12Rng,
    dim: usize,
    size: usize,
    field: Field,
    tol: &Tolerance,
) -> Result<OrthonormalFrame> {
    debug_assert!(size <= dim);
    'outer: loop {
        let mut members: Vec<UnitVector> = Vec::with_capacity(size);
        for _ in 0..size {
            let mut v = gaussian_vector(rng, dim, field);
            for u in &members {
                let c = inner(&v, u.as_vector())?;
                v = v.sub(&u.as_vector().scale_scalar(c)?)?;
            }
            if norm(&v) < 1e-6 {
                continue 'outer;
            }
            members.push(UnitVector::normalize(&v, tol)?);
        }
        return OrthonormalFrame::new(members, tol);
    }
}

fn gaussian_family(
    rng: &mut ChaCha12Rng,
    dim: usize,
    n: usize,
    field: Field,
    tol: &Tolerance,
) -> Result<VectorFamily> {
    let members = (0..n)
        .map(|_| loop {
            let g = gaussian_vector(rng, dim, field);
            if !g.is_zero(tol.nonzero) {
                break g;
            }
        })
        .collect();
    VectorFamily::new(members, tol)
}

fn sample_spec(
    rng: &mut ChaCha12Rng,
    dim: usize,
    n: usize,
    field: Field,
    constraint: SampleConstraint,
) -> SampleSpec {
    SampleSpec {
        dim,
        n,
        field,
        constraint,
        seed: Seed::new(rng.random()),
    }
}

/// Evaluate one random hypothesis-satisfying instance of the given theorem.
pub fn evaluate_random(
    id: TheoremId,
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<BoundReport> {
    match id {
        TheoremId::Dm => {
            let (family, a) = gen_dm(seed, index, tol)?;
            dm_evaluate(&family, &a, tol)
        }
        TheoremId::Thm21 => {
            let (family, frame, coeffs) = gen_thm21(seed, index, tol)?;
            thm21_evaluate(&family, &frame, &coeffs, tol)
        }
        TheoremId::Thm22 => {
            let (family, c_real, c_imag) = gen_thm22(seed, index, tol)?;
            thm22_evaluate(&family, &c_real, &c_imag, tol)
        }
        TheoremId::Cor23 => cor23_thm22_pair(seed, index, tol).map(|(r, _)| r),
        TheoremId::Thm24 => {
            let (family, c) = gen_thm24(seed, index, tol)?;
            thm24_evaluate(&family, &c, tol)
        }
        TheoremId::Thm25 => {
            let (family, r, s, a) = gen_thm25(seed, index, tol)?;
            thm25_evaluate(&family, r, s, &a, tol)
        }
        TheoremId::Thm26 => {
            let (family, frame, balls_real, balls_imag) = gen_thm26(seed, index, tol)?;
            thm26_evaluate(&family, &frame, &balls_real, &balls_imag, false, tol)
        }
        TheoremId::Thm27 => {
            let (family, a, radii) = gen_thm27(seed, index, tol)?;
            thm27_evaluate(&family, &a, &radii, tol)
        }
        TheoremId::Thm28 => {
            let (family, a, p) = gen_thm28(seed, index, tol)?;
            thm28_evaluate(&family, &a, p, tol)
        }
        TheoremId::Cor29 => cor29_thm28_pair(seed, index, tol).map(|(r, _)| r),
        TheoremId::Thm210 => {
            let (family, c) = gen_thm210(seed, index, tol)?;
            thm210_evaluate(&family, &c, tol)
        }
        TheoremId::Thm31 => {
            let (x1, x2, c) = gen_schwarz31(seed, index, tol)?;
            schwarz31_evaluate(&x1, &x2, &c, tol)
        }
        TheoremId::Cor32 => {
            let (x, y, r, s, a) = gen_cor32(seed, index, tol)?;
            cor32_evaluate(&x, &y, r, s, &a, tol)
        }
        TheoremId::Cor33 => cor33_schwarz31_pair(seed, index, tol).map(|(r, _)| r),
    }
}

fn gen_dm(seed: u64, index: u64, tol: &Tolerance) -> Result<(VectorFamily, UnitVector)> {
    let mut rng = rng_for(TheoremId::Dm, seed, index);
    let (dim, n) = random_dims(&mut rng);
    let field = random_field(&mut rng);
    let a = random_unit(&mut rng, dim, field, tol);
    // the angle condition needs Re⟨x_k, a⟩ ≥ 0 even for r = 0
    let members = gaussian_family(&mut rng, dim, n, field, tol)?
        .members()
        .iter()
        .map(|x| {
            if inner(x, a.as_vector())?.re < 0.0 {
                Ok(x.scale(-1.0))
            } else {
                Ok(x.clone())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((VectorFamily::new(members, tol)?, a))
}

fn gen_thm21(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(VectorFamily, OrthonormalFrame, CoefficientPairs)> {
    let mut rng = rng_for(TheoremId::Thm21, seed, index);
    let (dim, n) = random_dims(&mut rng);
    let field = random_field(&mut rng);
    let size = rng.random_range(1..=dim.min(4));
    let frame = random_frame(&mut rng, dim, size, field, tol)?;

    // coefficients scaled so the direction vector g = Σ(r_t + iρ_t)a_t has
    // norm ≤ 1, which makes condition (1) hold for any family aligned with g
    let target: f64 = rng.random_range(0.2..=1.0);
    let mut raw: Vec<(f64, f64)> = (0..size)
        .map(|_| {
            let re: f64 = rng.random_range(-1.0..1.0);
            let im: f64 = if field == Field::Complex {
                rng.random_range(-1.0..1.0)
            } else {
                0.0
            };
            (re, im)
        })
        .collect();
    let g_norm = raw
        .iter()
        .map(|(r, rho)| r * r + rho * rho)
        .sum::<f64>()
        .sqrt();
    if g_norm == 0.0 {
        raw[0].0 = 1.0;
    }
    let g_norm = raw
        .iter()
        .map(|(r, rho)| r * r + rho * rho)
        .sum::<f64>()
        .sqrt();
    let factor = target / g_norm;
    let pairs: Vec<(f64, f64)> = raw
        .iter()
        .map(|(r, rho)| (r * factor, rho * factor))
        .collect();

    let mut g = Vector::zero(dim, field)?;
    for ((r, rho), a_t) in pairs.iter().zip(frame.members()) {
        g = g.add(&a_t.as_vector().scale_scalar(Scalar::new(*r, *rho))?)?;
    }
    let members = (0..n)
        .map(|_| g.scale(rng.random_range(0.1..2.0)))
        .collect();
    let family = VectorFamily::new(members, tol)?;
    Ok((family, frame, CoefficientPairs::new(pairs)?))
}

/// Family in a small ball around `(u + iv)a` (u, v > 0), with the disk radii
/// `p`, `q` set just above the largest member distances. The ball radius is
/// shrunk until both feasibility conditions `p ≤ √((rα)² + s²)` hold.
fn gen_thm22(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(VectorFamily, DiskConstraint, DiskConstraint)> {
    let mut rng = rng_for(TheoremId::Thm22, seed, index);
    let (dim, n) = random_dims(&mut rng);
    let a = random_unit(&mut rng, dim, Field::Complex, tol);
    let u: f64 = rng.random_range(0.3..1.2);
    let v: f64 = rng.random_range(0.3..1.2);
    let (r, s): (f64, f64) = (rng.random_range(0.5..2.0), rng.random_range(0.5..2.0));
    let (r2, s2): (f64, f64) = (rng.random_range(0.5..2.0), rng.random_range(0.5..2.0));
    let center = a.as_vector().scale_scalar(Scalar::new(u, v))?;
    let ia = a.as_vector().times_i()?;

    let mut rho0 = 0.25 * u.min(v);
    for _ in 0..60 {
        let members = (0..n)
            .map(|_| sample_ball_point(&mut rng, &center, rho0, dim, Field::Complex))
            .collect::<Result<Vec<_>>>()?;
        if members.iter().any(|x| x.is_zero(tol.nonzero)) {
            rho0 *= 0.3;
            continue;
        }
        let family = VectorFamily::new(members, tol)?;
        let sa = a.as_vector().scale(s);
        let isa = ia.scale(s2);
        let p = family
            .members()
            .iter()
            .map(|x| Ok(norm(&x.scale(r).sub(&sa)?)))
            .collect::<Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0_f64, f64::max)
            * (1.0 + 1e-12)
            + 1e-15;
        let q = family
            .members()
            .iter()
            .map(|x| Ok(norm(&x.scale(r2).sub(&isa)?)))
            .collect::<Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0_f64, f64::max)
            * (1.0 + 1e-12)
            + 1e-15;
        let alpha = family.alpha_min();
        if p <= ((r * alpha).powi(2) + s * s).sqrt() && q <= ((r2 * alpha).powi(2) + s2 * s2).sqrt()
        {
            let c_real = DiskConstraint::new(r, s, p, Axis::RealAxis, a.clone())?;
            let c_imag = DiskConstraint::new(r2, s2, q, Axis::ImagAxis, a.clone())?;
            return Ok((family, c_real, c_imag));
        }
        rho0 *= 0.3;
    }
    Err(Error::SamplingExhausted(60))
}

/// Shared instance for the `p = r, q = s` specialization: membership in both
/// unit disks `‖x − a‖ ≤ 1` and `‖x − ia‖ ≤ 1` (the sets are r-independent
/// once `r = s`), with `r = s` so the specialized coefficient is exact.
pub fn cor23_thm22_pair(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(BoundReport, BoundReport)> {
    let mut rng = rng_for(TheoremId::Cor23, seed, index);
    let (dim, n) = random_dims(&mut rng);
    let a = random_unit(&mut rng, dim, Field::Complex, tol);
    let rs: f64 = rng.random_range(0.5..2.0);
    let ia = a.as_vector().times_i()?;
    // center strictly inside both unit disks, away from the origin
    let (center, slack_to_boundary, uv_min) = loop {
        let u: f64 = rng.random_range(0.2..0.9);
        let v: f64 = rng.random_range(0.2..0.9);
        let center = a.as_vector().scale_scalar(Scalar::new(u, v))?;
        let dist_a = norm(&center.sub(a.as_vector())?);
        let dist_ia = norm(&center.sub(&ia)?);
        if dist_a.max(dist_ia) <= 0.95 {
            break (center, 1.0 - dist_a.max(dist_ia), u.min(v));
        }
    };

    let mut rho0 = 0.5 * slack_to_boundary.min(uv_min);
    for _ in 0..60 {
        let members = (0..n)
            .map(|_| sample_ball_point(&mut rng, &center, rho0, dim, Field::Complex))
            .collect::<Result<Vec<_>>>()?;
        if members.iter().any(|x| x.is_zero(tol.nonzero)) {
            rho0 *= 0.3;
            continue;
        }
        let family = VectorFamily::new(members, tol)?;
        let in_disks = family.members().iter().all(|x| {
            let da = norm(&x.sub(a.as_vector()).unwrap());
            let dia = norm(&x.sub(&ia).unwrap());
            da <= 1.0 && dia <= 1.0
        });
        if in_disks {
            let rep_cor = cor23_evaluate(&family, rs, rs, &a, tol)?;
            let c_real = DiskConstraint::new(rs, rs, rs, Axis::RealAxis, a.clone())?;
            let c_imag = DiskConstraint::new(rs, rs, rs, Axis::ImagAxis, a.clone())?;
            let rep_thm = thm22_evaluate(&family, &c_real, &c_imag, tol)?;
            return Ok((rep_cor, rep_thm));
        }
        rho0 *= 0.3;
    }
    Err(Error::SamplingExhausted(60))
}

fn gen_thm24(seed: u64, index: u64, tol: &Tolerance) -> Result<(VectorFamily, DiskConstraint)> {
    let mut rng = rng_for(TheoremId::Thm24, seed, index);
    let (dim, n) = random_dims(&mut rng);
    let field = random_field(&mut rng);
    let a = random_unit(&mut rng, dim, field, tol);
    let r: f64 = rng.random_range(0.5..2.0);
    let s: f64 = rng.random_range(0.5..2.0);
    // p ≤ s keeps the origin outside the disk, so strict feasibility holds
    let p = s * rng.random_range(0.05..=1.0);
    let c = DiskConstraint::new(r, s, p, Axis::RealAxis, a)?;
    let spec = sample_spec(&mut rng, dim, n, field, SampleConstraint::Disk(c.clone()));
    let family = sample_in_disk(&spec, tol)?;
    Ok((family, c))
}

fn gen_thm25(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(VectorFamily, f64, f64, UnitVector)> {
    let mut rng = rng_for(TheoremId::Thm25, seed, index);
    let (dim, n_raw) = random_dims(&mut rng);
    let n = n_raw.max(2);
    let field = random_field(&mut rng);
    let a = random_unit(&mut rng, dim, field, tol);
    let r: f64 = rng.random_range(0.3..2.0);
    let s: f64 = rng.random_range(0.3..2.0);
    let scale: f64 = rng.random_range(0.2..2.0);
    let family = sample_zero_sum(dim, n, field, scale, Seed::new(rng.random()), tol)?;
    Ok((family, r, s, a))
}

fn gen_thm26(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(
    VectorFamily,
    OrthonormalFrame,
    Vec<BallConstraint>,
    Vec<BallConstraint>,
)> {
    let mut rng = rng_for(TheoremId::Thm26, seed, index);
    let (dim, n) = random_dims(&mut rng);
    let size = rng.random_range(1..=dim.min(3));
    let frame = random_frame(&mut rng, dim, size, Field::Complex, tol)?;

    // members with strictly positive real and imaginary frame coordinates,
    // so a feasible ball (m_t > 0) exists around every frame direction
    let base: Vec<(f64, f64)> = (0..size)
        .map(|_| (rng.random_range(0.4..1.2), rng.random_range(0.4..1.2)))
        .collect();
    let jitter = 0.5
        * base
            .iter()
            .map(|(u, v)| u.min(*v))
            .fold(f64::INFINITY, f64::min);
    let mut members = Vec::with_capacity(n);
    for _ in 0..n {
        let mut x = Vector::zero(dim, Field::Complex)?;
        for ((u, v), a_t) in base.iter().zip(frame.members()) {
            let du: f64 = rng.random_range(-jitter..jitter);
            let dv: f64 = rng.random_range(-jitter..jitter);
            x = x.add(&a_t.as_vector().scale_scalar(Scalar::new(u + du, v + dv))?)?;
        }
        members.push(x);
    }
    let family = VectorFamily::new(members, tol)?;

    let mut balls_real = Vec::with_capacity(size);
    let mut balls_imag = Vec::with_capacity(size);
    for a_t in frame.members() {
        for (axis, pick) in [
            (Axis::RealAxis, 0usize),
            (Axis::ImagAxis, 1usize),
        ] {
            // smallest center keeping the ball away from the origin is
            // max_k ‖x_k‖²/(2w_k) with w_k the relevant frame coordinate
            let mut c_min = 0.0_f64;
            for x in family.members() {
                let ip = inner(x, a_t.as_vector())?;
                let w = if pick == 0 { ip.re } else { ip.im };
                debug_assert!(w > 0.0);
                c_min = c_min.max(norm(x) * norm(x) / (2.0 * w));
            }
            let center = 1.25 * c_min;
            let axis_vec = axis.apply(a_t)?;
            let radius = family
                .members()
                .iter()
                .map(|x| Ok(norm(&x.sub(&axis_vec.scale(center))?)))
                .collect::<Result<Vec<f64>>>()?
                .into_iter()
                .fold(0.0_f64, f64::max)
                * (1.0 + 1e-12);
            let ball = BallConstraint::new(center - radius, center + radius, axis, a_t.clone())?;
            if axis == Axis::RealAxis {
                balls_real.push(ball);
            } else {
                balls_imag.push(ball);
            }
        }
    }
    Ok((family, frame, balls_real, balls_imag))
}

fn gen_thm27(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(VectorFamily, UnitVector, RadiiList)> {
    let mut rng = rng_for(TheoremId::Thm27, seed, index);
    let (dim, n) = random_dims(&mut rng);
    let field = random_field(&mut rng);
    let a = random_unit(&mut rng, dim, field, tol);
    let family = gaussian_family(&mut rng, dim, n, field, tol)?;
    let radii = family
        .members()
        .iter()
        .map(|x| {
            let defect = (norm(x) - inner(x, a.as_vector())?.re).max(0.0);
            Ok(defect * (1.0 + 1e-12) + rng.random_range(0.0..0.5))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok((family, a, RadiiList::new(radii)?))
}

fn gen_thm28(seed: u64, index: u64, tol: &Tolerance) -> Result<(VectorFamily, UnitVector, f64)> {
    let mut rng = rng_for(TheoremId::Thm28, seed, index);
    let (dim, n) = random_dims(&mut rng);
    let field = random_field(&mut rng);
    let a = random_unit(&mut rng, dim, field, tol);
    // p < 1 keeps the origin outside ‖x − a‖ ≤ p and α ≥ 1 − p > 0
    let p: f64 = rng.random_range(0.05..=0.95);
    let c = DiskConstraint::new(1.0, 1.0, p, Axis::RealAxis, a.clone())?;
    let spec = sample_spec(&mut rng, dim, n, field, SampleConstraint::Disk(c));
    let family = sample_in_disk(&spec, tol)?;
    Ok((family, a, p))
}

/// Shared instance for the unit-radius specialization: members sampled
/// strictly inside `‖x − a‖ ≤ 0.95 < 1`, evaluated by both cor29 and
/// thm28 at `p = 1`.
pub fn cor29_thm28_pair(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(BoundReport, BoundReport)> {
    let mut rng = rng_for(TheoremId::Cor29, seed, index);
    let (dim, n) = random_dims(&mut rng);
    let field = random_field(&mut rng);
    let a = random_unit(&mut rng, dim, field, tol);
    let c = DiskConstraint::new(1.0, 1.0, 0.95, Axis::RealAxis, a.clone())?;
    let spec = sample_spec(&mut rng, dim, n, field, SampleConstraint::Disk(c));
    let family = sample_in_disk(&spec, tol)?;
    let rep_cor = cor29_evaluate(&family, &a, tol)?;
    let rep_thm = thm28_evaluate(&family, &a, 1.0, tol)?;
    Ok((rep_cor, rep_thm))
}

fn gen_thm210(seed: u64, index: u64, tol: &Tolerance) -> Result<(VectorFamily, BallConstraint)> {
    let mut rng = rng_for(TheoremId::Thm210, seed, index);
    let (dim, n) = random_dims(&mut rng);
    let field = random_field(&mut rng);
    let a = random_unit(&mut rng, dim, field, tol);
    let m: f64 = rng.random_range(0.2..1.0);
    let big: f64 = m + rng.random_range(0.01..2.0);
    let c = BallConstraint::new(m, big, Axis::RealAxis, a)?;
    let spec = sample_spec(&mut rng, dim, n, field, SampleConstraint::Ball(c.clone()));
    let family = sample_in_ball(&spec, tol)?;
    Ok((family, c))
}

fn gen_schwarz31(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(Vector, Vector, DiskConstraint)> {
    let mut rng = rng_for(TheoremId::Thm31, seed, index);
    let (dim, _) = random_dims(&mut rng);
    let field = random_field(&mut rng);
    let a = random_unit(&mut rng, dim, field, tol);
    let r: f64 = rng.random_range(0.5..2.0);
    let s: f64 = rng.random_range(0.5..2.0);
    let p = s * rng.random_range(0.05..=1.0);
    let c = DiskConstraint::new(r, s, p, Axis::RealAxis, a)?;
    let spec = sample_spec(&mut rng, dim, 2, field, SampleConstraint::Disk(c.clone()));
    let family = sample_in_disk(&spec, tol)?;
    Ok((
        family.members()[0].clone(),
        family.members()[1].clone(),
        c,
    ))
}

fn gen_cor32(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(Vector, Vector, f64, f64, UnitVector)> {
    let mut rng = rng_for(TheoremId::Cor32, seed, index);
    let (dim, _) = random_dims(&mut rng);
    let field = random_field(&mut rng);
    let a = random_unit(&mut rng, dim, field, tol);
    let r: f64 = rng.random_range(0.5..2.0);
    let s: f64 = rng.random_range(0.5..2.0);
    let c = DiskConstraint::new(r, s, s, Axis::RealAxis, a.clone())?;
    let spec = sample_spec(&mut rng, dim, 2, field, SampleConstraint::Disk(c));
    loop {
        let mut spec = spec.clone();
        spec.seed = Seed::new(rng.random());
        let family = sample_in_disk(&spec, tol)?;
        let (x, y) = (family.members()[0].clone(), family.members()[1].clone());
        if norm(&x) < norm(&y) {
            return Ok((x, y, r, s, a));
        }
        if norm(&y) < norm(&x) {
            return Ok((y, x, r, s, a));
        }
    }
}

/// Shared instance for the ball-to-disk substitution: a random ball pair
/// (m < M strictly) evaluated by both cor33 and schwarz31 with `r = 1`,
/// `s = (m+M)/2`, `p = (M−m)/2`.
pub fn cor33_schwarz31_pair(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(BoundReport, BoundReport)> {
    let mut rng = rng_for(TheoremId::Cor33, seed, index);
    let (dim, _) = random_dims(&mut rng);
    let field = random_field(&mut rng);
    let a = random_unit(&mut rng, dim, field, tol);
    let m: f64 = rng.random_range(0.2..1.0);
    let big: f64 = m + rng.random_range(0.01..2.0);
    let ball = BallConstraint::new(m, big, Axis::RealAxis, a.clone())?;
    let spec = sample_spec(&mut rng, dim, 2, field, SampleConstraint::Ball(ball.clone()));
    let family = sample_in_ball(&spec, tol)?;
    let (x1, x2) = (family.members()[0].clone(), family.members()[1].clone());
    let rep_cor = cor33_evaluate(&x1, &x2, &ball, tol)?;
    let disk = DiskConstraint::new(
        1.0,
        0.5 * (m + big),
        0.5 * (big - m),
        Axis::RealAxis,
        a,
    )?;
    let rep_thm = schwarz31_evaluate(&x1, &x2, &disk, tol)?;
    Ok((rep_cor, rep_thm))
}

/// rhs of thm28 re-derived through thm27 with `r_k = (1−β)/β·Re⟨x_k, a⟩`.
pub fn thm28_thm27_pair(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(BoundReport, BoundReport)> {
    let (family, a, p) = gen_thm28(seed, index, tol)?;
    let rep = thm28_evaluate(&family, &a, p, tol)?;
    let beta = rep.coefficients["beta"];
    let radii = family
        .members()
        .iter()
        .map(|x| Ok(((1.0 - beta) / beta * inner(x, a.as_vector())?.re).max(0.0)))
        .collect::<Result<Vec<f64>>>()?;
    let rep27 = thm27_evaluate(&family, &a, &RadiiList::new(radii)?, tol)?;
    Ok((rep, rep27))
}

/// rhs of thm210 re-derived through thm27 with
/// `r_k = (1−α_{m,M})/α_{m,M}·Re⟨x_k, a⟩`.
pub fn thm210_thm27_pair(
    seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<(BoundReport, BoundReport)> {
    let (family, c) = gen_thm210(seed, index, tol)?;
    let rep = thm210_evaluate(&family, &c, tol)?;
    let alpha = rep.coefficients["alpha_mM"];
    let radii = family
        .members()
        .iter()
        .map(|x| Ok(((1.0 - alpha) / alpha * inner(x, c.anchor.as_vector())?.re).max(0.0)))
        .collect::<Result<Vec<f64>>>()?;
    let rep27 = thm27_evaluate(&family, &c.anchor, &RadiiList::new(radii)?, tol)?;
    Ok((rep, rep27))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn every_theorem_generates_satisfying_instances() {
        for id in TheoremId::ALL {
            for index in 0..25 {
                let rep = evaluate_random(id, 42, index, &tol())
                    .unwrap_or_else(|e| panic!("{id}: {e}"));
                assert!(rep.hypotheses_ok, "{id} instance {index} violates hypotheses");
                let allowed = -(1e-9 + 1e-9 * rep.lhs.abs().max(rep.rhs.abs()));
                assert!(
                    rep.slack >= allowed,
                    "{id} instance {index}: slack {} below {}",
                    rep.slack,
                    allowed
                );
            }
        }
    }

    #[test]
    fn generation_is_deterministic() {
        for id in [TheoremId::Dm, TheoremId::Thm22, TheoremId::Thm26] {
            let a = evaluate_random(id, 7, 3, &tol()).unwrap();
            let b = evaluate_random(id, 7, 3, &tol()).unwrap();
            assert_eq!(a.lhs, b.lhs);
            assert_eq!(a.rhs, b.rhs);
        }
    }

    #[test]
    fn paired_generators_agree() {
        for index in 0..50 {
            let (cor, thm) = cor23_thm22_pair(1, index, &tol()).unwrap();
            assert!((cor.lhs - thm.lhs).abs() <= 1e-12 * (1.0 + thm.lhs.abs()));
            assert_eq!(cor.rhs, thm.rhs);

            let (cor, thm) = cor29_thm28_pair(1, index, &tol()).unwrap();
            assert_eq!(cor.lhs, thm.lhs);
            assert_eq!(cor.rhs, thm.rhs);

            let (cor, thm) = cor33_schwarz31_pair(1, index, &tol()).unwrap();
            assert!((cor.lhs - thm.lhs).abs() <= 1e-12);
            assert!((cor.rhs - thm.rhs).abs() <= 1e-12);

            let (rep, rep27) = thm28_thm27_pair(1, index, &tol()).unwrap();
            assert!((rep.rhs - rep27.rhs).abs() <= 1e-12 * (1.0 + rep.rhs.abs()));

            let (rep, rep27) = thm210_thm27_pair(1, index, &tol()).unwrap();
            assert!((rep.rhs - rep27.rhs).abs() <= 1e-12 * (1.0 + rep.rhs.abs()));
        }
    }
}

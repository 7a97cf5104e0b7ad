//! Evaluators for the reverse triangle inequalities: the Diaz–Metcalf bound,
//! the orthonormal-frame bound, the disk- and ball-constrained multiplicative
//! bounds, the zero-sum lower bound, and the additive reverses.

use std::collections::BTreeMap;

use crate::bounds::{
    alpha_ball, alpha_disk, ball_coefficient, BoundReport, CoefficientPairs, EqualityCertificate,
    RadiiList, TheoremId, EQUALITY_TOL,
};
use crate::constraints::{
    ball_margin, disk_margin, dm_margin, Axis, BallConstraint, DiskConstraint, Margin,
};
use crate::space::{
    family_sum, inner, norm, Field, OrthonormalFrame, Scalar, Tolerance, UnitVector, Vector,
    VectorFamily,
};
use crate::{Error, Result};

fn check_family_anchor(family: &VectorFamily, a: &UnitVector) -> Result<()> {
    if family.dim() != a.dim() {
        return Err(Error::DimensionMismatch(family.dim(), a.dim()));
    }
    if family.field() != a.field() {
        return Err(Error::FieldMismatch(family.field(), a.field()));
    }
    Ok(())
}

fn anchors_match(x: &UnitVector, y: &UnitVector) -> Result<()> {
    let diff = x.as_vector().sub(y.as_vector())?;
    if norm(&diff) > 1e-12 {
        return Err(Error::InvalidParameter(
            "constraints must share the same anchor".into(),
        ));
    }
    Ok(())
}

fn margins_ok(margins: &[Margin], tol: &Tolerance) -> bool {
    margins.iter().all(|m| m.satisfied(tol))
}

/// Diaz–Metcalf bound `r Σ‖x_k‖ ≤ ‖Σ x_k‖` with the largest admissible
/// coefficient `r = max(0, min_k Re⟨x_k, a⟩/‖x_k‖)`.
pub fn dm_evaluate(family: &VectorFamily, a: &UnitVector, tol: &Tolerance) -> Result<BoundReport> {
    check_family_anchor(family, a)?;
    let raw = family
        .members()
        .iter()
        .map(|x| Ok(inner(x, a.as_vector())?.re / norm(x)))
        .collect::<Result<Vec<f64>>>()?;
    let r = raw.iter().fold(f64::INFINITY, |acc, v| acc.min(*v)).max(0.0);
    let margins: Vec<Margin> = family
        .members()
        .iter()
        .map(|x| dm_margin(x, a, r))
        .collect::<Result<_>>()?;
    let hypotheses_ok = margins_ok(&margins, tol);
    let lhs = r * family.norm_sum();
    let actual = family_sum(family);
    let rhs = norm(&actual);
    let slack = rhs - lhs;
    let predicted = a.as_vector().scale(r * family.norm_sum());
    let equality = EqualityCertificate::check(&actual, predicted, true, slack);
    let mut coefficients = BTreeMap::new();
    coefficients.insert("r".into(), r);
    Ok(BoundReport {
        theorem_id: TheoremId::Dm,
        hypothesis_margins: margins,
        hypotheses_ok,
        lhs,
        rhs,
        slack,
        coefficients,
        equality: Some(equality),
    })
}

/// Orthonormal-frame bound `(Σ_t (r_t² + ρ_t²))^{1/2} Σ‖x_k‖ ≤ ‖Σ x_k‖`
/// under the per-(t,k) conditions `r_t²‖x_k‖ ≤ Re⟨x_k, r_t a_t⟩` and
/// `ρ_t²‖x_k‖ ≤ Im⟨x_k, ρ_t a_t⟩`.
pub fn thm21_evaluate(
    family: &VectorFamily,
    frame: &OrthonormalFrame,
    coeffs: &CoefficientPairs,
    tol: &Tolerance,
) -> Result<BoundReport> {
    if frame.len() != coeffs.len() {
        return Err(Error::LengthMismatch(format!(
            "frame has {} members but {} coefficient pairs given",
            frame.len(),
            coeffs.len()
        )));
    }
    if family.dim() != frame.dim() {
        return Err(Error::DimensionMismatch(family.dim(), frame.dim()));
    }
    if family.field() != frame.field() {
        return Err(Error::FieldMismatch(family.field(), frame.field()));
    }
    let any_imag = coeffs.pairs().iter().any(|(_, rho)| *rho != 0.0);
    if any_imag && family.field() == Field::Real {
        return Err(Error::RealFieldImagAxis);
    }

    let mut margins = Vec::with_capacity(2 * frame.len() * family.len());
    for ((r_t, rho_t), a_t) in coeffs.pairs().iter().zip(frame.members()) {
        for x in family.members() {
            let ip = inner(x, a_t.as_vector())?;
            let nx = norm(x);
            margins.push(Margin::new(r_t * ip.re - r_t * r_t * nx));
            margins.push(Margin::new(rho_t * ip.im - rho_t * rho_t * nx));
        }
    }
    let hypotheses_ok = margins_ok(&margins, tol);

    let coeff_norm = coeffs
        .pairs()
        .iter()
        .map(|(r, rho)| r * r + rho * rho)
        .sum::<f64>()
        .sqrt();
    let lhs = coeff_norm * family.norm_sum();
    let actual = family_sum(family);
    let rhs = norm(&actual);
    let slack = rhs - lhs;

    // predicted Σ x_k = Σ‖x_k‖ Σ_t (r_t + iρ_t) a_t
    let mut direction = Vector::zero(family.dim(), family.field())?;
    for ((r_t, rho_t), a_t) in coeffs.pairs().iter().zip(frame.members()) {
        direction = direction.add(&a_t.as_vector().scale_scalar(Scalar::new(*r_t, *rho_t))?)?;
    }
    let predicted = direction.scale(family.norm_sum());
    let equality = EqualityCertificate::check(&actual, predicted, true, slack);

    let mut coefficients = BTreeMap::new();
    coefficients.insert("coeff_norm".into(), coeff_norm);
    Ok(BoundReport {
        theorem_id: TheoremId::Thm21,
        hypothesis_margins: margins,
        hypotheses_ok,
        lhs,
        rhs,
        slack,
        coefficients,
        equality: Some(equality),
    })
}

/// Two-disk bound `(α_{r,s}² + β_{r′,s′}²)^{1/2} Σ‖x_k‖ ≤ ‖Σ x_k‖`.
///
/// `c_real` carries `(r, s, p)` anchored at `a`, `c_imag` carries
/// `(r′, s′, q)` anchored at `i·a`. Infeasible `p` or `q` is reported via
/// `hypotheses_ok = false`, not raised.
pub fn thm22_evaluate(
    family: &VectorFamily,
    c_real: &DiskConstraint,
    c_imag: &DiskConstraint,
    tol: &Tolerance,
) -> Result<BoundReport> {
    if c_real.axis != Axis::RealAxis || c_imag.axis != Axis::ImagAxis {
        return Err(Error::InvalidParameter(
            "thm22 requires a real-axis and an imaginary-axis disk".into(),
        ));
    }
    anchors_match(&c_real.anchor, &c_imag.anchor)?;
    check_family_anchor(family, &c_real.anchor)?;
    if family.field() != Field::Complex {
        return Err(Error::RealFieldImagAxis);
    }

    let mut margins = Vec::with_capacity(2 * family.len() + 2);
    for x in family.members() {
        margins.push(disk_margin(x, c_real)?);
    }
    for x in family.members() {
        margins.push(disk_margin(x, c_imag)?);
    }
    let alpha = family.alpha_min();
    let p_bound = ((c_real.r * alpha).powi(2) + c_real.s * c_real.s).sqrt();
    let q_bound = ((c_imag.r * alpha).powi(2) + c_imag.s * c_imag.s).sqrt();
    margins.push(Margin::new(p_bound - c_real.p));
    margins.push(Margin::new(q_bound - c_imag.p));
    let hypotheses_ok = margins_ok(&margins, tol);

    let alpha_rs = alpha_disk(family, c_real);
    let beta_rs = alpha_disk(family, c_imag);
    let lhs = (alpha_rs * alpha_rs + beta_rs * beta_rs).sqrt() * family.norm_sum();
    let actual = family_sum(family);
    let rhs = norm(&actual);
    let slack = rhs - lhs;

    let predicted = c_real
        .anchor
        .as_vector()
        .scale_scalar(Scalar::new(alpha_rs, beta_rs))?
        .scale(family.norm_sum());
    let equality = EqualityCertificate::check(&actual, predicted, true, slack);

    let mut coefficients = BTreeMap::new();
    coefficients.insert("alpha_rs".into(), alpha_rs);
    coefficients.insert("beta_rs".into(), beta_rs);
    Ok(BoundReport {
        theorem_id: TheoremId::Thm22,
        hypothesis_margins: margins,
        hypotheses_ok,
        lhs,
        rhs,
        slack,
        coefficients,
        equality: Some(equality),
    })
}

/// Specialized two-disk bound `(rα)/(s√2) Σ‖x_k‖ ≤ ‖Σ x_k‖` under
/// `‖rx_k − sa‖ ≤ r` and `‖rx_k − isa‖ ≤ s`, with both coefficients
/// substituted by `rα/(2s)`.
pub fn cor23_evaluate(
    family: &VectorFamily,
    r: f64,
    s: f64,
    a: &UnitVector,
    tol: &Tolerance,
) -> Result<BoundReport> {
    if family.field() != Field::Complex {
        return Err(Error::RealFieldImagAxis);
    }
    let c_real = DiskConstraint::new(r, s, r, Axis::RealAxis, a.clone())?;
    let c_imag = DiskConstraint::new(r, s, s, Axis::ImagAxis, a.clone())?;
    let base = thm22_evaluate(family, &c_real, &c_imag, tol)?;

    let alpha = family.alpha_min();
    let coeff = r * alpha / (2.0 * s);
    let lhs = r * alpha / (s * 2.0_f64.sqrt()) * family.norm_sum();
    let rhs = base.rhs;
    let slack = rhs - lhs;

    let actual = family_sum(family);
    let predicted = a
        .as_vector()
        .scale_scalar(Scalar::new(coeff, coeff))?
        .scale(family.norm_sum());
    let equality = EqualityCertificate::check(&actual, predicted, true, slack);

    let mut coefficients = BTreeMap::new();
    coefficients.insert("alpha_rs".into(), coeff);
    coefficients.insert("beta_rs".into(), coeff);
    coefficients.insert("alpha_min".into(), alpha);
    coefficients.insert("thm22_lhs".into(), base.lhs);
    Ok(BoundReport {
        theorem_id: TheoremId::Cor23,
        hypothesis_margins: base.hypothesis_margins,
        hypotheses_ok: base.hypotheses_ok,
        lhs,
        rhs,
        slack,
        coefficients,
        equality: Some(equality),
    })
}

/// Single-disk bound `α_{r,s} Σ‖x_k‖ ≤ ‖Σ x_k‖` under the strict feasibility
/// `p < ((rα)² + s²)^{1/2}`; works over both fields.
pub fn thm24_evaluate(
    family: &VectorFamily,
    c: &DiskConstraint,
    tol: &Tolerance,
) -> Result<BoundReport> {
    if c.axis != Axis::RealAxis {
        return Err(Error::InvalidParameter(
            "thm24 requires a real-axis disk".into(),
        ));
    }
    check_family_anchor(family, &c.anchor)?;

    let mut margins = Vec::with_capacity(family.len() + 1);
    for x in family.members() {
        margins.push(disk_margin(x, c)?);
    }
    let alpha = family.alpha_min();
    let p_bound = ((c.r * alpha).powi(2) + c.s * c.s).sqrt();
    let feas = Margin::new(p_bound - c.p);
    // strict feasibility: the margin must be positive, not merely within tol
    let hypotheses_ok = margins_ok(&margins, tol) && feas.value > 0.0;
    margins.push(feas);

    let alpha_rs = alpha_disk(family, c);
    let lhs = alpha_rs * family.norm_sum();
    let actual = family_sum(family);
    let rhs = norm(&actual);
    let slack = rhs - lhs;
    let predicted = c.anchor.as_vector().scale(alpha_rs * family.norm_sum());
    let equality = EqualityCertificate::check(&actual, predicted, true, slack);

    let mut coefficients = BTreeMap::new();
    coefficients.insert("alpha_rs".into(), alpha_rs);
    coefficients.insert("alpha_min".into(), alpha);
    Ok(BoundReport {
        theorem_id: TheoremId::Thm24,
        hypothesis_margins: margins,
        hypotheses_ok,
        lhs,
        rhs,
        slack,
        coefficients,
        equality: Some(equality),
    })
}

/// Zero-sum lower bound `√(r²α² + s²) ≤ max_k ‖r x_k − s a‖` for families
/// with `Σ x_k = 0`. A nonzero family sum is reported, not raised.
pub fn thm25_evaluate(
    family: &VectorFamily,
    r: f64,
    s: f64,
    a: &UnitVector,
    tol: &Tolerance,
) -> Result<BoundReport> {
    if !r.is_finite() || !s.is_finite() || r <= 0.0 || s <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "thm25 requires r, s > 0, got r = {r}, s = {s}"
        )));
    }
    check_family_anchor(family, a)?;

    let actual = family_sum(family);
    let margins = vec![Margin::new(-norm(&actual))];
    let hypotheses_ok = margins_ok(&margins, tol);

    let alpha = family.alpha_min();
    let lhs = (r * r * alpha * alpha + s * s).sqrt();
    let scaled_anchor = a.as_vector().scale(s);
    let rhs = family
        .members()
        .iter()
        .map(|x| Ok(norm(&x.scale(r).sub(&scaled_anchor)?)))
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    let slack = rhs - lhs;

    let mut coefficients = BTreeMap::new();
    coefficients.insert("alpha_min".into(), alpha);
    Ok(BoundReport {
        theorem_id: TheoremId::Thm25,
        hypothesis_margins: margins,
        hypotheses_ok,
        lhs,
        rhs,
        slack,
        coefficients,
        equality: None,
    })
}

/// Frame-of-balls bound
/// `(Σ_t α_{m_t,M_t}² + α_{ℓ_t,L_t}²)^{1/2} Σ‖x_k‖ ≤ ‖Σ x_k‖`.
///
/// `printed_denominator` switches the imaginary-axis coefficients to the
/// paper's printed `(m_t + M_t)‖x_k‖` denominator instead of the corrected
/// `(ℓ_t + L_t)‖x_k‖`; default callers pass `false`.
pub fn thm26_evaluate(
    family: &VectorFamily,
    frame: &OrthonormalFrame,
    balls_real: &[BallConstraint],
    balls_imag: &[BallConstraint],
    printed_denominator: bool,
    tol: &Tolerance,
) -> Result<BoundReport> {
    if balls_real.len() != frame.len() || balls_imag.len() != frame.len() {
        return Err(Error::LengthMismatch(format!(
            "frame has {} members but {} real and {} imaginary balls given",
            frame.len(),
            balls_real.len(),
            balls_imag.len()
        )));
    }
    if family.dim() != frame.dim() {
        return Err(Error::DimensionMismatch(family.dim(), frame.dim()));
    }
    if family.field() != Field::Complex || frame.field() != Field::Complex {
        return Err(Error::RealFieldImagAxis);
    }
    for (t, (br, bi)) in balls_real.iter().zip(balls_imag).enumerate() {
        if br.axis != Axis::RealAxis || bi.axis != Axis::ImagAxis {
            return Err(Error::InvalidParameter(format!(
                "ball axes at frame index {t} do not match (real, imaginary)"
            )));
        }
        anchors_match(&br.anchor, &frame.members()[t])?;
        anchors_match(&bi.anchor, &frame.members()[t])?;
    }

    let mut margins = Vec::with_capacity(2 * frame.len() * family.len());
    for (br, bi) in balls_real.iter().zip(balls_imag) {
        for x in family.members() {
            margins.push(ball_margin(x, br)?);
            margins.push(ball_margin(x, bi)?);
        }
    }
    let hypotheses_ok = margins_ok(&margins, tol);

    let mut coefficients = BTreeMap::new();
    let mut sq_sum = 0.0;
    let mut direction = Vector::zero(family.dim(), Field::Complex)?;
    for (t, (br, bi)) in balls_real.iter().zip(balls_imag).enumerate() {
        let a_re = alpha_ball(family, br.lower, br.upper);
        let a_im = if printed_denominator {
            family
                .members()
                .iter()
                .map(|x| {
                    let nx = norm(x);
                    (nx * nx + bi.lower * bi.upper) / ((br.lower + br.upper) * nx)
                })
                .fold(f64::INFINITY, f64::min)
        } else {
            alpha_ball(family, bi.lower, bi.upper)
        };
        sq_sum += a_re * a_re + a_im * a_im;
        coefficients.insert(format!("alpha_mM_{}", t + 1), a_re);
        coefficients.insert(format!("alpha_lL_{}", t + 1), a_im);
        direction = direction.add(
            &frame.members()[t]
                .as_vector()
                .scale_scalar(Scalar::new(a_re, a_im))?,
        )?;
    }
    let lhs = sq_sum.sqrt() * family.norm_sum();
    let actual = family_sum(family);
    let rhs = norm(&actual);
    let slack = rhs - lhs;
    let predicted = direction.scale(family.norm_sum());
    let equality = EqualityCertificate::check(&actual, predicted, true, slack);

    Ok(BoundReport {
        theorem_id: TheoremId::Thm26,
        hypothesis_margins: margins,
        hypotheses_ok,
        lhs,
        rhs,
        slack,
        coefficients,
        equality: Some(equality),
    })
}

fn additive_report(
    theorem_id: TheoremId,
    family: &VectorFamily,
    a: &UnitVector,
    margins: Vec<Margin>,
    hypotheses_ok: bool,
    rhs: f64,
    coefficients: BTreeMap<String, f64>,
) -> Result<BoundReport> {
    let actual = family_sum(family);
    let lhs = family.norm_sum() - norm(&actual);
    let slack = rhs - lhs;
    let auxiliary_ok = family.norm_sum() >= rhs - EQUALITY_TOL;
    let predicted = a.as_vector().scale(family.norm_sum() - rhs);
    let equality = EqualityCertificate::check(&actual, predicted, auxiliary_ok, slack);
    Ok(BoundReport {
        theorem_id,
        hypothesis_margins: margins,
        hypotheses_ok,
        lhs,
        rhs,
        slack,
        coefficients,
        equality: Some(equality),
    })
}

/// Additive reverse `Σ‖x_k‖ − ‖Σ x_k‖ ≤ Σ r_k` under
/// `‖x_k‖ − Re⟨x_k, a⟩ ≤ r_k`.
pub fn thm27_evaluate(
    family: &VectorFamily,
    a: &UnitVector,
    radii: &RadiiList,
    tol: &Tolerance,
) -> Result<BoundReport> {
    if radii.len() != family.len() {
        return Err(Error::LengthMismatch(format!(
            "family has {} members but {} radii given",
            family.len(),
            radii.len()
        )));
    }
    check_family_anchor(family, a)?;

    let margins: Vec<Margin> = family
        .members()
        .iter()
        .zip(radii.radii())
        .map(|(x, r_k)| {
            let defect = norm(x) - inner(x, a.as_vector())?.re;
            Ok(Margin::new(r_k - defect))
        })
        .collect::<Result<_>>()?;
    let hypotheses_ok = margins_ok(&margins, tol);
    additive_report(
        TheoremId::Thm27,
        family,
        a,
        margins,
        hypotheses_ok,
        radii.sum(),
        BTreeMap::new(),
    )
}

fn thm28_report(
    theorem_id: TheoremId,
    family: &VectorFamily,
    a: &UnitVector,
    p: f64,
    tol: &Tolerance,
) -> Result<BoundReport> {
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "disk radius p must be finite and strictly positive, got {p}"
        )));
    }
    check_family_anchor(family, a)?;

    let mut margins = Vec::with_capacity(family.len() + 1);
    for x in family.members() {
        margins.push(Margin::new(p - norm(&x.sub(a.as_vector())?)));
    }
    let alpha = family.alpha_min();
    let range = Margin::new((alpha * alpha + 1.0).sqrt() - p);
    // p must lie strictly below √(α² + 1)
    let hypotheses_ok = margins_ok(&margins, tol) && range.value > 0.0;
    margins.push(range);

    let beta = family
        .members()
        .iter()
        .map(|x| {
            let t = norm(x);
            (t * t - p * p + 1.0) / (2.0 * t)
        })
        .fold(f64::INFINITY, f64::min);
    let actual = family_sum(family);
    let rhs = (1.0 - beta) / beta * inner(&actual, a.as_vector())?.re;

    let mut coefficients = BTreeMap::new();
    coefficients.insert("beta".into(), beta);
    coefficients.insert("alpha_min".into(), alpha);
    additive_report(theorem_id, family, a, margins, hypotheses_ok, rhs, coefficients)
}

/// Additive reverse `Σ‖x_k‖ − ‖Σ x_k‖ ≤ (1−β)/β Re⟨Σ x_k, a⟩` with
/// `β = min_k (‖x_k‖² − p² + 1)/(2‖x_k‖)` under `max_k ‖x_k − a‖ ≤ p` and
/// `p ∈ (0, √(α² + 1))`.
pub fn thm28_evaluate(
    family: &VectorFamily,
    a: &UnitVector,
    p: f64,
    tol: &Tolerance,
) -> Result<BoundReport> {
    thm28_report(TheoremId::Thm28, family, a, p, tol)
}

/// Unit-radius specialization `Σ‖x_k‖ − ‖Σ x_k‖ ≤ (2−α)/α Re⟨Σ x_k, a⟩`
/// under `max_k ‖x_k − a‖ ≤ 1`; here `β = α/2`.
pub fn cor29_evaluate(
    family: &VectorFamily,
    a: &UnitVector,
    tol: &Tolerance,
) -> Result<BoundReport> {
    let report = thm28_report(TheoremId::Cor29, family, a, 1.0, tol)?;
    debug_assert!(
        (report.coefficients["beta"] - family.alpha_min() / 2.0).abs()
            <= 1e-12 * (1.0 + family.alpha_min()),
        "cor29 coefficient must reduce to alpha/2"
    );
    Ok(report)
}

/// Ball-constrained additive reverse
/// `Σ‖x_k‖ − ‖Σ x_k‖ ≤ (1−α_{m,M})/α_{m,M} Re⟨Σ x_k, a⟩`.
pub fn thm210_evaluate(
    family: &VectorFamily,
    c: &BallConstraint,
    tol: &Tolerance,
) -> Result<BoundReport> {
    if c.axis != Axis::RealAxis {
        return Err(Error::InvalidParameter(
            "thm210 requires a real-axis ball".into(),
        ));
    }
    check_family_anchor(family, &c.anchor)?;

    let margins: Vec<Margin> = family
        .members()
        .iter()
        .map(|x| ball_margin(x, c))
        .collect::<Result<_>>()?;
    let hypotheses_ok = margins_ok(&margins, tol);

    let alpha_mm = alpha_ball(family, c.lower, c.upper);
    let actual = family_sum(family);
    let rhs = (1.0 - alpha_mm) / alpha_mm * inner(&actual, c.anchor.as_vector())?.re;

    let mut coefficients = BTreeMap::new();
    coefficients.insert("alpha_mM".into(), alpha_mm);
    coefficients.insert(
        "ball_coefficient_min_norm".into(),
        ball_coefficient(family.alpha_min(), c.lower, c.upper),
    );
    additive_report(
        TheoremId::Thm210,
        family,
        &c.anchor.clone(),
        margins,
        hypotheses_ok,
        rhs,
        coefficients,
    )
}

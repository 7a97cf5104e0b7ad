//! Hypothesis predicates of the inequalities: disk membership
//! `‖rx − s·axis(a)‖ ≤ p`, ball membership `Re⟨M·axis(a) − x, x − m·axis(a)⟩ ≥ 0`,
//! the Diaz–Metcalf angle condition, and the feasibility bounds on the disk
//! radii.
//!
//! Margins are signed reals (≥ 0 means satisfied) rather than booleans so
//! property tests and the extremal search can probe constraint boundaries.

use serde::{Deserialize, Serialize};

use crate::space::{inner, norm, Field, Tolerance, UnitVector, Vector, VectorFamily};
use crate::{Error, Result};

/// Whether a constraint is anchored at `a` or at `i·a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    RealAxis,
    ImagAxis,
}

impl Axis {
    /// `a` for the real axis, `i·a` for the imaginary axis.
    ///
    /// The imaginary axis requires the complex field; with real-field
    /// vectors `Im⟨x, a⟩ ≡ 0` makes the imaginary-axis hypotheses
    /// unsatisfiable except degenerately, so they are rejected outright.
    pub fn apply(&self, anchor: &UnitVector) -> Result<Vector> {
        match self {
            Axis::RealAxis => Ok(anchor.as_vector().clone()),
            Axis::ImagAxis => {
                if anchor.field() == Field::Real {
                    return Err(Error::RealFieldImagAxis);
                }
                anchor.as_vector().times_i()
            }
        }
    }
}

/// The hypothesis set `{x : ‖rx − s·axis(a)‖ ≤ p}`: a ball of center
/// `(s/r)·axis(a)` and radius `p/r`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiskConstraint {
    pub r: f64,
    pub s: f64,
    pub p: f64,
    pub axis: Axis,
    pub anchor: UnitVector,
}

impl DiskConstraint {
    pub fn new(r: f64, s: f64, p: f64, axis: Axis, anchor: UnitVector) -> Result<Self> {
        for (name, v) in [("r", r), ("s", s), ("p", p)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "disk parameter {name} must be finite and strictly positive, got {v}"
                )));
            }
        }
        if axis == Axis::ImagAxis && anchor.field() == Field::Real {
            return Err(Error::RealFieldImagAxis);
        }
        Ok(DiskConstraint {
            r,
            s,
            p,
            axis,
            anchor,
        })
    }

    /// Center `(s/r)·axis(a)` of the disk viewed as a ball.
    pub fn center(&self) -> Result<Vector> {
        Ok(self.axis.apply(&self.anchor)?.scale(self.s / self.r))
    }

    /// Radius `p/r` of the disk viewed as a ball.
    pub fn radius(&self) -> f64 {
        self.p / self.r
    }
}

/// The hypothesis set `Re⟨M·axis(a) − x, x − m·axis(a)⟩ ≥ 0`, equivalently
/// the ball `‖x − ((m+M)/2)·axis(a)‖ ≤ (M−m)/2`.
///
/// `lower`/`upper` hold the bounds `m`/`M` (or `ℓ`/`L` for imaginary-axis
/// instances).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BallConstraint {
    pub lower: f64,
    pub upper: f64,
    pub axis: Axis,
    pub anchor: UnitVector,
}

impl BallConstraint {
    pub fn new(lower: f64, upper: f64, axis: Axis, anchor: UnitVector) -> Result<Self> {
        if !lower.is_finite() || !upper.is_finite() || lower <= 0.0 || upper < lower {
            return Err(Error::InvalidParameter(format!(
                "ball parameters require M ≥ m > 0, got m = {lower}, M = {upper}"
            )));
        }
        if axis == Axis::ImagAxis && anchor.field() == Field::Real {
            return Err(Error::RealFieldImagAxis);
        }
        Ok(BallConstraint {
            lower,
            upper,
            axis,
            anchor,
        })
    }

    /// Center `((m+M)/2)·axis(a)` of the equivalent ball form.
    pub fn center(&self) -> Result<Vector> {
        Ok(self
            .axis
            .apply(&self.anchor)?
            .scale(0.5 * (self.lower + self.upper)))
    }

    /// Radius `(M−m)/2` of the equivalent ball form.
    pub fn radius(&self) -> f64 {
        0.5 * (self.upper - self.lower)
    }
}

/// Signed hypothesis slack; ≥ 0 means the hypothesis is satisfied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Margin {
    pub value: f64,
}

impl Margin {
    pub fn new(value: f64) -> Self {
        Margin { value }
    }

    pub fn satisfied(&self, tol: &Tolerance) -> bool {
        self.value >= -tol.abs
    }
}

/// `p − ‖r·x − s·axis(a)‖`; ≥ 0 iff `x` lies in the disk.
pub fn disk_margin(x: &Vector, c: &DiskConstraint) -> Result<Margin> {
    let axis = c.axis.apply(&c.anchor)?;
    let shifted = x.scale(c.r).sub(&axis.scale(c.s))?;
    Ok(Margin::new(c.p - norm(&shifted)))
}

/// `Re⟨M·axis(a) − x, x − m·axis(a)⟩`; ≥ 0 iff `x` lies in the ball.
pub fn ball_margin(x: &Vector, c: &BallConstraint) -> Result<Margin> {
    let axis = c.axis.apply(&c.anchor)?;
    let left = axis.scale(c.upper).sub(x)?;
    let right = x.sub(&axis.scale(c.lower))?;
    Ok(Margin::new(inner(&left, &right)?.re))
}

/// Equivalent ball form: `(M−m)/2 − ‖x − ((m+M)/2)·axis(a)‖`.
///
/// Differs from [`ball_margin`] as a function but induces the same
/// membership set.
pub fn ball_margin_equiv(x: &Vector, c: &BallConstraint) -> Result<Margin> {
    let center = c.center()?;
    Ok(Margin::new(c.radius() - norm(&x.sub(&center)?)))
}

/// Diaz–Metcalf angle condition: `Re⟨x, a⟩/‖x‖ − ρ`.
pub fn dm_margin(x: &Vector, a: &UnitVector, rho: f64) -> Result<Margin> {
    if !rho.is_finite() || rho < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "Diaz–Metcalf coefficient must be ≥ 0, got {rho}"
        )));
    }
    let n = norm(x);
    if n == 0.0 {
        return Err(Error::ZeroVector);
    }
    let re = inner(x, a.as_vector())?.re;
    Ok(Margin::new(re / n - rho))
}

/// Feasibility of the disk radius: `p ≤ √((rα)² + s²)` (non-strict) or
/// `p < √((rα)² + s²)` (strict), with `α = min_k ‖x_k‖`.
pub fn p_feasible(family: &VectorFamily, c: &DiskConstraint, strict: bool) -> bool {
    let bound = ((c.r * family.alpha_min()).powi(2) + c.s * c.s).sqrt();
    if strict {
        c.p < bound
    } else {
        c.p <= bound
    }
}

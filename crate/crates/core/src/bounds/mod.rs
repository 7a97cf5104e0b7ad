//! One evaluator per reverse inequality.
//!
//! Every evaluator verifies the hypotheses of its inequality, computes the
//! coefficients, and returns a [`BoundReport`] with the left- and right-hand
//! sides, the slack (always the amount by which the inequality holds), and
//! an equality certificate where the inequality characterizes its equality
//! case. Violated hypotheses are reported through `hypotheses_ok = false`
//! with the offending margins, never as errors, so boundary configurations
//! can be probed; hard errors are reserved for structural problems.

mod schwarz;
mod triangle;

pub use schwarz::{cor32_evaluate, cor33_evaluate, schwarz31_evaluate};
pub use triangle::{
    cor23_evaluate, cor29_evaluate, dm_evaluate, thm210_evaluate, thm21_evaluate, thm22_evaluate,
    thm24_evaluate, thm25_evaluate, thm26_evaluate, thm27_evaluate, thm28_evaluate,
};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constraints::{DiskConstraint, Margin};
use crate::space::{norm, Vector, VectorFamily};
use crate::{Error, Result};

/// Absolute tolerance for equality detection (residual of the predicted sum
/// and |slack|). Looser than the arithmetic tolerance because equality
/// constructions compound several operations.
pub const EQUALITY_TOL: f64 = 1e-8;

/// Identifies which inequality a report refers to.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum TheoremId {
    Dm,
    Thm21,
    Thm22,
    Cor23,
    Thm24,
    Thm25,
    Thm26,
    Thm27,
    Thm28,
    Cor29,
    Thm210,
    Thm31,
    Cor32,
    Cor33,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::Dm,
        TheoremId::Thm21,
        TheoremId::Thm22,
        TheoremId::Cor23,
        TheoremId::Thm24,
        TheoremId::Thm25,
        TheoremId::Thm26,
        TheoremId::Thm27,
        TheoremId::Thm28,
        TheoremId::Cor29,
        TheoremId::Thm210,
        TheoremId::Thm31,
        TheoremId::Cor32,
        TheoremId::Cor33,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Dm => "dm",
            TheoremId::Thm21 => "thm21",
            TheoremId::Thm22 => "thm22",
            TheoremId::Cor23 => "cor23",
            TheoremId::Thm24 => "thm24",
            TheoremId::Thm25 => "thm25",
            TheoremId::Thm26 => "thm26",
            TheoremId::Thm27 => "thm27",
            TheoremId::Thm28 => "thm28",
            TheoremId::Cor29 => "cor29",
            TheoremId::Thm210 => "thm210",
            TheoremId::Thm31 => "thm31",
            TheoremId::Cor32 => "cor32",
            TheoremId::Cor33 => "cor33",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem id {s:?}")))
    }
}

/// Per-frame-member coefficients `(r_t, ρ_t)` of the orthonormal-frame bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoefficientPairs {
    pairs: Vec<(f64, f64)>,
}

impl CoefficientPairs {
    pub fn new(pairs: Vec<(f64, f64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidParameter(
                "coefficient list must be nonempty".into(),
            ));
        }
        if pairs.iter().any(|(r, rho)| !r.is_finite() || !rho.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(CoefficientPairs { pairs })
    }

    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Per-member radii `r_k ≥ 0` of the additive reverse bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadiiList {
    radii: Vec<f64>,
}

impl RadiiList {
    pub fn new(radii: Vec<f64>) -> Result<Self> {
        if radii.iter().any(|r| !r.is_finite() || *r < 0.0) {
            return Err(Error::InvalidParameter(
                "radii must be finite and nonnegative".into(),
            ));
        }
        Ok(RadiiList { radii })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.radii.iter().sum()
    }
}

/// The equality-case check of an inequality: the inequality is tight iff the
/// family sum equals a predicted vector and any side conditions hold.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EqualityCertificate {
    /// The equality-case value of `Σ x_k`.
    pub predicted_sum: Vector,
    /// `‖actual_sum − predicted_sum‖`.
    pub residual: f64,
    /// Side conditions, e.g. `Σ‖x_k‖ ≥ Σ r_k`.
    pub auxiliary_ok: bool,
    /// residual ≤ tol ∧ auxiliary_ok ∧ |slack| ≤ tol.
    pub holds: bool,
}

impl EqualityCertificate {
    pub(crate) fn check(actual_sum: &Vector, predicted: Vector, auxiliary_ok: bool, slack: f64) -> Self {
        let residual = match actual_sum.sub(&predicted) {
            Ok(diff) => norm(&diff),
            Err(_) => f64::INFINITY,
        };
        let holds = residual <= EQUALITY_TOL && auxiliary_ok && slack.abs() <= EQUALITY_TOL;
        EqualityCertificate {
            predicted_sum: predicted,
            residual,
            auxiliary_ok,
            holds,
        }
    }
}

/// Result of evaluating one inequality on one configuration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem_id: TheoremId,
    pub hypothesis_margins: Vec<Margin>,
    pub hypotheses_ok: bool,
    pub lhs: f64,
    pub rhs: f64,
    /// Amount by which the inequality holds; negative means violated.
    pub slack: f64,
    /// Named computed constants (`alpha_rs`, `beta_rs`, …).
    pub coefficients: BTreeMap<String, f64>,
    /// Present only for inequalities with a characterized equality case.
    pub equality: Option<EqualityCertificate>,
}

/// `min_k (r²‖x_k‖² − p² + s²) / (2rs‖x_k‖)`.
///
/// With an imaginary-axis constraint the same formula yields the second
/// coefficient β (parameters r′, s′, q) of the two-disk bound.
pub fn alpha_disk(family: &VectorFamily, c: &DiskConstraint) -> f64 {
    family
        .members()
        .iter()
        .map(|x| disk_coefficient(norm(x), c.r, c.s, c.p))
        .fold(f64::INFINITY, f64::min)
}

/// Single-member disk coefficient `(r²t² − p² + s²)/(2rst)` for `t = ‖x‖`.
pub(crate) fn disk_coefficient(t: f64, r: f64, s: f64, p: f64) -> f64 {
    (r * r * t * t - p * p + s * s) / (2.0 * r * s * t)
}

/// `min_k (‖x_k‖² + mM) / ((m+M)‖x_k‖)`.
///
/// With `(ℓ, L)` in place of `(m, M)` this computes the imaginary-axis ball
/// coefficient (corrected denominator `(ℓ+L)‖x_k‖`).
pub fn alpha_ball(family: &VectorFamily, lower: f64, upper: f64) -> f64 {
    family
        .members()
        .iter()
        .map(|x| ball_coefficient(norm(x), lower, upper))
        .fold(f64::INFINITY, f64::min)
}

/// Single-member ball coefficient `(t² + mM)/((m+M)t)` for `t = ‖x‖`.
pub(crate) fn ball_coefficient(t: f64, lower: f64, upper: f64) -> f64 {
    (t * t + lower * upper) / ((lower + upper) * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::Axis;
    use crate::space::{Field, Scalar, Tolerance, UnitVector};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn anchor(field: Field) -> UnitVector {
        UnitVector::basis(2, 0, field).unwrap()
    }

    #[test]
    fn alpha_disk_examples() {
        let a = anchor(Field::Real);
        let c = DiskConstraint::new(1.0, 1.0, 1.0, Axis::RealAxis, a.clone()).unwrap();
        let fam = VectorFamily::new(vec![a.as_vector().clone()], &tol()).unwrap();
        assert!((alpha_disk(&fam, &c) - 0.5).abs() < 1e-15);

        // boundary alignment forces alpha = 1
        let (r, s, p) = (2.0, 1.5, 0.75);
        let c2 = DiskConstraint::new(r, s, p, Axis::RealAxis, a.clone()).unwrap();
        let fam2 =
            VectorFamily::new(vec![a.as_vector().scale((s + p) / r)], &tol()).unwrap();
        assert!((alpha_disk(&fam2, &c2) - 1.0).abs() < 1e-12);

        // complex member (1+i)a with r=s=p=1: 2/(2√2) = 1/√2
        let ac = anchor(Field::Complex);
        let cc = DiskConstraint::new(1.0, 1.0, 1.0, Axis::RealAxis, ac.clone()).unwrap();
        let x = ac.as_vector().scale_scalar(Scalar::new(1.0, 1.0)).unwrap();
        let famc = VectorFamily::new(vec![x], &tol()).unwrap();
        assert!((alpha_disk(&famc, &cc) - 1.0 / 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn alpha_ball_examples() {
        let a = anchor(Field::Real);
        let (m, big) = (0.5_f64, 3.5_f64);
        // minimum of t ↦ (t² + mM)/((m+M)t) is at t = √(mM)
        let fam = VectorFamily::new(
            vec![a.as_vector().scale((m * big).sqrt())],
            &tol(),
        )
        .unwrap();
        let expected = 2.0 * (m * big).sqrt() / (m + big);
        assert!((alpha_ball(&fam, m, big) - expected).abs() < 1e-12);

        // degenerate ball m = M
        let fam2 = VectorFamily::new(vec![a.as_vector().scale(2.0)], &tol()).unwrap();
        assert!((alpha_ball(&fam2, 2.0, 2.0) - 1.0).abs() < 1e-15);

        // (1+i)a with m=0.5, M=3.5: (2 + 1.75)/(4√2)
        let ac = anchor(Field::Complex);
        let x = ac.as_vector().scale_scalar(Scalar::new(1.0, 1.0)).unwrap();
        let famc = VectorFamily::new(vec![x], &tol()).unwrap();
        let expected = (2.0 + 1.75) / (4.0 * 2.0_f64.sqrt());
        assert!((alpha_ball(&famc, 0.5, 3.5) - expected).abs() < 1e-12);
    }

    #[test]
    fn theorem_id_round_trips_through_str() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!("thm99".parse::<TheoremId>().is_err());
    }

    #[test]
    fn radii_must_be_nonnegative() {
        assert!(RadiiList::new(vec![0.0, 1.0]).is_ok());
        assert!(RadiiList::new(vec![-0.1]).is_err());
    }
}

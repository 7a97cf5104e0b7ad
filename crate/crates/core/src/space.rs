//! Coordinate vectors over the real or complex field and the inner product
//! every inequality in this crate is stated over.
//!
//! The inner product is linear in the first argument and conjugate-linear in
//! the second, so `Re⟨x, a⟩` and `Im⟨x, a⟩` read with the anchor vector in
//! second position. Real-field vectors share the complex storage with the
//! imaginary parts pinned to zero, so one code path serves both fields.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Scalar values of the inner product; the imaginary unit is `Scalar::I`.
pub type Scalar = Complex64;

/// The ambient field of a vector or family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

/// Comparison tolerances used across the crate.
///
/// The comparison rule is `a ≤ b` accepted iff `a − b ≤ abs + rel·max(|a|,|b|)`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub unit: f64,
    pub ortho: f64,
    pub nonzero: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs: 1e-9,
            rel: 1e-9,
            unit: 1e-9,
            ortho: 1e-9,
            nonzero: 1e-12,
        }
    }
}

impl Tolerance {
    /// `a ≤ b` up to the combined absolute/relative allowance.
    pub fn leq(&self, a: f64, b: f64) -> bool {
        a - b <= self.abs + self.rel * a.abs().max(b.abs())
    }

    /// `a = b` up to the combined allowance (two-sided `leq`).
    pub fn close(&self, a: f64, b: f64) -> bool {
        self.leq(a, b) && self.leq(b, a)
    }

    fn validate(&self) -> Result<()> {
        let fields = [self.abs, self.rel, self.unit, self.ortho, self.nonzero];
        if fields.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidParameter(
                "tolerances must be finite and nonnegative".into(),
            ));
        }
        if self.unit <= 0.0 || self.ortho <= 0.0 || self.nonzero <= 0.0 {
            return Err(Error::InvalidParameter(
                "unit/ortho/nonzero tolerances must be strictly positive".into(),
            ));
        }
        Ok(())
    }

    /// Validating constructor for externally supplied tolerances.
    pub fn new(abs: f64, rel: f64, unit: f64, ortho: f64, nonzero: f64) -> Result<Self> {
        let tol = Tolerance {
            abs,
            rel,
            unit,
            ortho,
            nonzero,
        };
        tol.validate()?;
        Ok(tol)
    }
}

/// A dense coordinate vector of dimension ≥ 1 over a fixed field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vector {
    coords: Vec<Scalar>,
    field: Field,
}

impl Vector {
    /// Validating constructor: `d ≥ 1`, all coordinates finite, and in the
    /// real field all imaginary parts exactly zero.
    pub fn new(coords: Vec<Scalar>, field: Field) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        for c in &coords {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFinite);
            }
            if field == Field::Real && c.im != 0.0 {
                return Err(Error::ImagInRealField);
            }
        }
        Ok(Vector { coords, field })
    }

    /// Real-field vector from real coordinates.
    pub fn from_reals(values: &[f64]) -> Result<Self> {
        Vector::new(
            values.iter().map(|&v| Scalar::new(v, 0.0)).collect(),
            Field::Real,
        )
    }

    /// Complex-field vector from `[re, im]` pairs.
    pub fn from_pairs(pairs: &[[f64; 2]]) -> Result<Self> {
        Vector::new(
            pairs.iter().map(|p| Scalar::new(p[0], p[1])).collect(),
            Field::Complex,
        )
    }

    /// The zero vector.
    pub fn zero(dim: usize, field: Field) -> Result<Self> {
        Vector::new(vec![Scalar::new(0.0, 0.0); dim], field)
    }

    /// The `k`-th standard basis vector.
    pub fn basis(dim: usize, k: usize, field: Field) -> Result<Self> {
        if k >= dim {
            return Err(Error::InvalidParameter(format!(
                "basis index {k} out of range for dimension {dim}"
            )));
        }
        let mut coords = vec![Scalar::new(0.0, 0.0); dim];
        coords[k] = Scalar::new(1.0, 0.0);
        Vector::new(coords, field)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    fn check_compatible(&self, other: &Vector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Vector {
            coords,
            field: self.field,
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Vector {
            coords,
            field: self.field,
        })
    }

    /// Real scalar multiple; keeps the field.
    pub fn scale(&self, factor: f64) -> Vector {
        Vector {
            coords: self.coords.iter().map(|c| c * factor).collect(),
            field: self.field,
        }
    }

    /// Complex scalar multiple; requires the complex field unless the factor
    /// is real.
    pub fn scale_scalar(&self, factor: Scalar) -> Result<Vector> {
        if self.field == Field::Real && factor.im != 0.0 {
            return Err(Error::RealFieldImagAxis);
        }
        Ok(Vector {
            coords: self.coords.iter().map(|c| c * factor).collect(),
            field: self.field,
        })
    }

    /// Multiplication by the imaginary unit; complex field only.
    pub fn times_i(&self) -> Result<Vector> {
        self.scale_scalar(Scalar::I)
    }

    pub fn is_zero(&self, nonzero_tol: f64) -> bool {
        norm(self) <= nonzero_tol
    }
}

/// Inner product `⟨x, y⟩ = Σ x_j conj(y_j)`: linear in the first argument,
/// conjugate-linear in the second.
pub fn inner(x: &Vector, y: &Vector) -> Result<Scalar> {
    x.check_compatible(y)?;
    Ok(x.coords
        .iter()
        .zip(&y.coords)
        .map(|(a, b)| a * b.conj())
        .sum())
}

/// Induced norm `‖x‖ = sqrt(Re⟨x, x⟩)`.
pub fn norm(x: &Vector) -> f64 {
    x.coords
        .iter()
        .map(|c| c.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// A construction-checked unit vector (`|‖v‖ − 1| ≤ tol.unit`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitVector {
    inner: Vector,
}

impl UnitVector {
    pub fn new(v: Vector, tol: &Tolerance) -> Result<Self> {
        let n = norm(&v);
        if (n - 1.0).abs() > tol.unit {
            return Err(Error::NotUnit(n));
        }
        Ok(UnitVector { inner: v })
    }

    /// Normalizes a nonzero vector.
    pub fn normalize(v: &Vector, tol: &Tolerance) -> Result<Self> {
        let n = norm(v);
        if n <= tol.nonzero {
            return Err(Error::ZeroVector);
        }
        Ok(UnitVector {
            inner: v.scale(1.0 / n),
        })
    }

    /// Standard basis unit vector `e_k`.
    pub fn basis(dim: usize, k: usize, field: Field) -> Result<Self> {
        Ok(UnitVector {
            inner: Vector::basis(dim, k, field)?,
        })
    }

    pub fn as_vector(&self) -> &Vector {
        &self.inner
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn field(&self) -> Field {
        self.inner.field()
    }
}

/// True iff all pairwise inner products are within `tol.ortho` of `δ_st`.
pub fn check_frame(members: &[UnitVector], tol: &Tolerance) -> bool {
    for (s, a) in members.iter().enumerate() {
        for b in members.iter().skip(s + 1) {
            match inner(a.as_vector(), b.as_vector()) {
                Ok(ip) => {
                    if ip.norm() > tol.ortho {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
    }
    true
}

/// A list of pairwise-orthonormal unit vectors with a shared dimension.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrthonormalFrame {
    members: Vec<UnitVector>,
}

impl OrthonormalFrame {
    pub fn new(members: Vec<UnitVector>, tol: &Tolerance) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let dim = members[0].dim();
        let field = members[0].field();
        for m in &members {
            if m.dim() != dim {
                return Err(Error::DimensionMismatch(dim, m.dim()));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(field, m.field()));
            }
        }
        if !check_frame(&members, tol) {
            return Err(Error::NotOrthonormal);
        }
        Ok(OrthonormalFrame { members })
    }

    pub fn members(&self) -> &[UnitVector] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.members[0].dim()
    }

    pub fn field(&self) -> Field {
        self.members[0].field()
    }
}

/// The tuple `x_1, …, x_n` of nonzero vectors every inequality quantifies
/// over, with the derived quantity `α = min_k ‖x_k‖`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorFamily {
    members: Vec<Vector>,
}

impl VectorFamily {
    pub fn new(members: Vec<Vector>, tol: &Tolerance) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let dim = members[0].dim();
        let field = members[0].field();
        for m in &members {
            if m.dim() != dim {
                return Err(Error::DimensionMismatch(dim, m.dim()));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(field, m.field()));
            }
            if m.is_zero(tol.nonzero) {
                return Err(Error::ZeroVector);
            }
        }
        Ok(VectorFamily { members })
    }

    pub fn members(&self) -> &[Vector] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.members[0].dim()
    }

    pub fn field(&self) -> Field {
        self.members[0].field()
    }

    /// `α = min_k ‖x_k‖`, strictly positive by construction.
    pub fn alpha_min(&self) -> f64 {
        self.members.iter().map(|m| norm(m)).fold(f64::INFINITY, f64::min)
    }

    /// `Σ_k ‖x_k‖`.
    pub fn norm_sum(&self) -> f64 {
        self.members.iter().map(|m| norm(m)).sum()
    }

    /// Componentwise `Σ_k x_k`.
    pub fn sum(&self) -> Vector {
        let mut acc = self.members[0].clone();
        for m in &self.members[1..] {
            acc = acc.add(m).expect("family members share dimension and field");
        }
        acc
    }
}

/// Componentwise sum of the family members.
pub fn family_sum(f: &VectorFamily) -> Vector {
    f.sum()
}

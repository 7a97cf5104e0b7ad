//! Numerical toolkit for reverse triangle inequalities and reverse Schwarz
//! inequalities in finite-dimensional real/complex inner product spaces.
//!
//! The crate is organized around five layers:
//!
//! * [`space`] — complex-capable coordinate vectors, the inner product, unit
//!   vectors, orthonormal frames and vector families.
//! * [`constraints`] — the hypothesis predicates of the inequalities: disk
//!   membership `‖rx − sa‖ ≤ p`, ball membership `Re⟨Ma − x, x − ma⟩ ≥ 0`,
//!   and the angle condition of the Diaz–Metcalf bound.
//! * [`bounds`] — one evaluator per inequality. Each returns a
//!   [`bounds::BoundReport`] with hypothesis margins, LHS, RHS, slack and an
//!   equality certificate where the inequality has one.
//! * [`witnesses`] — seeded constrained samplers, projections onto the
//!   constraint sets, and constructors of exact equality cases.
//! * [`extremal`] — multi-start derivative-free pattern search for
//!   configurations that make a bound tight.
//!
//! [`instances`] additionally provides randomized hypothesis-satisfying
//! instance generators used for large-scale soundness sweeps.
//!
//! All randomness is ChaCha12 seeded from a caller-provided 64-bit seed, with
//! one substream per sample index, so every operation in the crate is
//! deterministic and reproducible across platforms.

pub mod bounds;
pub mod constraints;
pub mod extremal;
pub mod instances;
pub mod space;
pub mod witnesses;

mod rng;

pub use bounds::{BoundReport, EqualityCertificate, TheoremId};
pub use constraints::{Axis, BallConstraint, DiskConstraint, Margin};
pub use space::{Field, OrthonormalFrame, Scalar, Tolerance, UnitVector, Vector, VectorFamily};
pub use witnesses::Seed;

use thiserror::Error;

/// Errors shared by all modules of the crate.
///
/// Evaluators reserve hard errors for structural problems (mismatched
/// dimensions, zero vectors where an inequality requires `x_k ≠ 0`).
/// Violated hypotheses are never errors; they are reported through
/// `BoundReport::hypotheses_ok`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("field mismatch: {0:?} vs {1:?}")]
    FieldMismatch(Field, Field),
    #[error("imaginary-axis constraint requires complex field")]
    RealFieldImagAxis,
    #[error("non-finite component")]
    NonFinite,
    #[error("vector dimension must be at least 1")]
    EmptyVector,
    #[error("real-field vector has nonzero imaginary component")]
    ImagInRealField,
    #[error("vector is not unit length: ‖v‖ = {0}")]
    NotUnit(f64),
    #[error("vectors are not orthonormal")]
    NotOrthonormal,
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("family must contain at least one vector")]
    EmptyFamily,
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("sampling failed after {0} attempts")]
    SamplingExhausted(u32),
    #[error("operation does not support theorem {0}")]
    UnsupportedTheorem(TheoremId),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

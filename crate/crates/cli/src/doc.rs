//! On-disk family format.
//!
//! A family document is JSON of the form
//!
//! ```json
//! {
//!   "field": "complex",
//!   "dim": 3,
//!   "anchor": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
//!   "families": [
//!     [ [[0.5, 0.1], [0.0, 0.0], [0.2, -0.3]] ]
//!   ]
//! }
//! ```
//!
//! Every coordinate is an `[re, im]` pair; in the real field all imaginary
//! parts must be exactly zero. `anchor` is optional and defaults to the
//! first standard basis vector. Serialization goes through serde_json's
//! shortest round-trip float printing, so a document survives a
//! parse/serialize cycle bit-exactly.

use serde::{Deserialize, Serialize};

use revineq::space::{Field, Tolerance, UnitVector, Vector, VectorFamily};

use crate::{CliError, CliResult};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyDocument {
    pub field: Field,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<Vec<[f64; 2]>>,
    pub families: Vec<Vec<Vec<[f64; 2]>>>,
}

fn vector_from_pairs(pairs: &[[f64; 2]], field: Field) -> CliResult<Vector> {
    let coords = pairs
        .iter()
        .map(|p| revineq::Scalar::new(p[0], p[1]))
        .collect();
    Ok(Vector::new(coords, field)?)
}

fn pairs_of(v: &Vector) -> Vec<[f64; 2]> {
    v.coords().iter().map(|c| [c.re, c.im]).collect()
}

impl FamilyDocument {
    /// The anchor as a validated unit vector, defaulting to `e_1`.
    pub fn anchor_unit(&self, tol: &Tolerance) -> CliResult<UnitVector> {
        match &self.anchor {
            None => Ok(UnitVector::basis(self.dim, 0, self.field)?),
            Some(pairs) => {
                if pairs.len() != self.dim {
                    return Err(CliError::Input(format!(
                        "anchor has {} coordinates but dim = {}",
                        pairs.len(),
                        self.dim
                    )));
                }
                let v = vector_from_pairs(pairs, self.field)?;
                Ok(UnitVector::new(v, tol)?)
            }
        }
    }

    /// All families, validated against the document's `dim` and `field`.
    pub fn to_families(&self, tol: &Tolerance) -> CliResult<Vec<VectorFamily>> {
        if self.families.is_empty() {
            return Err(CliError::Input("document contains no families".into()));
        }
        self.families
            .iter()
            .enumerate()
            .map(|(i, fam)| {
                let members = fam
                    .iter()
                    .map(|pairs| {
                        if pairs.len() != self.dim {
                            return Err(CliError::Input(format!(
                                "family {i}: member has {} coordinates but dim = {}",
                                pairs.len(),
                                self.dim
                            )));
                        }
                        vector_from_pairs(pairs, self.field)
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                Ok(VectorFamily::new(members, tol)?)
            })
            .collect()
    }

    pub fn from_families(
        field: Field,
        dim: usize,
        anchor: Option<&UnitVector>,
        families: &[VectorFamily],
    ) -> Self {
        FamilyDocument {
            field,
            dim,
            anchor: anchor.map(|a| pairs_of(a.as_vector())),
            families: families
                .iter()
                .map(|f| f.members().iter().map(pairs_of).collect())
                .collect(),
        }
    }
}

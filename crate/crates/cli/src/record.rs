//! Machine-readable run records.
//!
//! Records deliberately carry no timestamps or wall-clock data: two runs
//! with the same arguments must produce byte-identical files. Timing goes
//! to stderr only.

use serde::{Deserialize, Serialize};

use revineq::bounds::BoundReport;
use revineq::extremal::TightnessResult;
use revineq::space::Field;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportRow {
    pub theorem_id: String,
    pub n: usize,
    pub dim: usize,
    pub field: Field,
    pub report: BoundReport,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Summary {
    pub min_slack: f64,
    pub mean_slack: f64,
    /// Reports whose hypotheses hold but whose slack is below tolerance.
    pub violations: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRecord {
    /// The subcommand that produced this record.
    pub command: String,
    pub version: String,
    /// Echo of the effective parameters, for provenance.
    pub spec: serde_json::Value,
    pub reports: Vec<ReportRow>,
    pub summary: Summary,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtremalOutcome {
    /// The swept disk radius, when `--sweep-p` was used.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    pub outcome: std::result::Result<TightnessResult, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtremalRecord {
    pub command: String,
    pub version: String,
    pub spec: serde_json::Value,
    pub outcomes: Vec<ExtremalOutcome>,
}

impl RunRecord {
    pub fn summarize(rows: &[ReportRow], tol_abs: f64, tol_rel: f64) -> Summary {
        let mut min_slack = f64::INFINITY;
        let mut total = 0.0;
        let mut violations = 0;
        for row in rows {
            let r = &row.report;
            min_slack = min_slack.min(r.slack);
            total += r.slack;
            let grace = tol_abs + tol_rel * r.lhs.abs().max(r.rhs.abs());
            if r.hypotheses_ok && r.slack < -grace {
                violations += 1;
            }
        }
        Summary {
            min_slack,
            mean_slack: if rows.is_empty() {
                0.0
            } else {
                total / rows.len() as f64
            },
            violations,
        }
    }
}

/// Ratio used in CSV output; 0 when the denominator is numerically zero.
pub fn ratio(lhs: f64, rhs: f64, tol_abs: f64) -> f64 {
    if rhs.abs() <= tol_abs {
        0.0
    } else {
        lhs / rhs
    }
}

pub const CSV_HEADER: &str = "theorem_id,n,dim,field,lhs,rhs,slack,ratio,hypotheses_ok";

pub fn csv_line(row: &ReportRow, tol_abs: f64) -> String {
    let r = &row.report;
    let field = match row.field {
        Field::Real => "real",
        Field::Complex => "complex",
    };
    format!(
        "{},{},{},{},{},{},{},{},{}",
        row.theorem_id,
        row.n,
        row.dim,
        field,
        r.lhs,
        r.rhs,
        r.slack,
        ratio(r.lhs, r.rhs, tol_abs),
        r.hypotheses_ok
    )
}

//! Implementations of the four subcommands. Each takes a clap `Args`
//! struct and returns the process exit code (0 clean, 1 when a verify run
//! found violated bounds) or a [`CliError`].

use std::path::PathBuf;
use std::str::FromStr;

use clap::Args;

use revineq::bounds::{
    cor23_evaluate, cor29_evaluate, cor32_evaluate, cor33_evaluate, dm_evaluate,
    schwarz31_evaluate, thm21_evaluate, thm210_evaluate, thm22_evaluate, thm24_evaluate,
    thm25_evaluate, thm26_evaluate, thm27_evaluate, thm28_evaluate, BoundReport,
    CoefficientPairs, RadiiList, TheoremId,
};
use revineq::constraints::{Axis, BallConstraint, DiskConstraint};
use revineq::extremal::{sharpness_sweep, SearchConfig};
use revineq::space::{Field, OrthonormalFrame, Tolerance, UnitVector, VectorFamily};
use revineq::witnesses::{sample_in_ball, sample_in_disk, sample_zero_sum, SampleConstraint, SampleSpec, Seed};

use crate::doc::FamilyDocument;
use crate::record::{csv_line, ExtremalOutcome, ExtremalRecord, ReportRow, RunRecord, CSV_HEADER};
use crate::{write_atomic, CliError, CliResult};

const VERSION: &str = env!("CARGO_PKG_VERSION");

fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "real" => Ok(Field::Real),
        "complex" => Ok(Field::Complex),
        other => Err(format!("field must be \"real\" or \"complex\", got {other:?}")),
    }
}

fn parse_theorem(s: &str) -> CliResult<TheoremId> {
    Ok(TheoremId::from_str(s)?)
}

fn require(value: Option<f64>, flag: &str, theorem: TheoremId) -> CliResult<f64> {
    value.ok_or_else(|| CliError::Input(format!("{theorem} requires --{flag}")))
}

/// Comma-separated floats, e.g. `--radii 0.1,0.2`.
fn parse_float_list(raw: &str, flag: &str) -> CliResult<Vec<f64>> {
    raw.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Input(format!("--{flag}: cannot parse {tok:?} as a number")))
        })
        .collect()
}

/// `r:rho` pairs for the orthonormal-frame bound, e.g. `--coeffs 0.4:0.1,0.2:0`.
fn parse_coeff_pairs(raw: &str) -> CliResult<Vec<(f64, f64)>> {
    raw.split(',')
        .map(|tok| {
            let (a, b) = tok
                .trim()
                .split_once(':')
                .ok_or_else(|| CliError::Input(format!("--coeffs: expected r:rho, got {tok:?}")))?;
            let r = a
                .parse::<f64>()
                .map_err(|_| CliError::Input(format!("--coeffs: cannot parse {a:?}")))?;
            let rho = b
                .parse::<f64>()
                .map_err(|_| CliError::Input(format!("--coeffs: cannot parse {b:?}")))?;
            Ok((r, rho))
        })
        .collect()
}

fn emit(out: Option<&PathBuf>, contents: &str) -> CliResult<()> {
    match out {
        Some(path) => write_atomic(path, contents),
        None => {
            println!("{contents}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

// ---------------------------------------------------------------------------
// verify

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Theorem id: dm, thm21..thm210, cor23, cor29, thm31, cor32, cor33.
    #[arg(long)]
    pub theorem: String,
    /// Family document to check (JSON).
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// json (full run record) or csv (one line per family).
    #[arg(long, default_value = "json")]
    pub format: String,
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub s: Option<f64>,
    /// Real-axis disk radius.
    #[arg(long)]
    pub p: Option<f64>,
    /// Imaginary-axis disk radius.
    #[arg(long)]
    pub q: Option<f64>,
    /// Real-axis ball lower bound m.
    #[arg(long)]
    pub m: Option<f64>,
    /// Real-axis ball upper bound M.
    #[arg(long = "M")]
    pub upper: Option<f64>,
    /// Imaginary-axis ball lower bound ℓ.
    #[arg(long)]
    pub l: Option<f64>,
    /// Imaginary-axis ball upper bound L.
    #[arg(long = "L")]
    pub upper_l: Option<f64>,
    /// Per-member radii (comma list, or one value broadcast to the family).
    #[arg(long)]
    pub radii: Option<String>,
    /// Frame coefficients as r:rho pairs over the first standard basis vectors.
    #[arg(long)]
    pub coeffs: Option<String>,
    #[arg(long, default_value_t = 1e-9)]
    pub tol_abs: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol_rel: f64,
}

impl VerifyArgs {
    fn tolerance(&self) -> CliResult<Tolerance> {
        Ok(Tolerance::new(self.tol_abs, self.tol_rel, 1e-9, 1e-9, 1e-12)?)
    }
}

fn evaluate_family(
    id: TheoremId,
    family: &VectorFamily,
    anchor: &UnitVector,
    args: &VerifyArgs,
    tol: &Tolerance,
) -> CliResult<BoundReport> {
    let r = args.r.unwrap_or(1.0);
    let s = args.s.unwrap_or(1.0);
    let pair = |family: &VectorFamily| -> CliResult<(revineq::Vector, revineq::Vector)> {
        if family.len() != 2 {
            return Err(CliError::Input(format!(
                "{id} expects exactly 2 vectors per family, got {}",
                family.len()
            )));
        }
        Ok((family.members()[0].clone(), family.members()[1].clone()))
    };
    let report = match id {
        TheoremId::Dm => dm_evaluate(family, anchor, tol)?,
        TheoremId::Thm21 => {
            let raw = args
                .coeffs
                .as_deref()
                .ok_or_else(|| CliError::Input("thm21 requires --coeffs".into()))?;
            let pairs = parse_coeff_pairs(raw)?;
            let members = (0..pairs.len())
                .map(|k| UnitVector::basis(family.dim(), k, family.field()))
                .collect::<revineq::Result<Vec<_>>>()?;
            let frame = OrthonormalFrame::new(members, tol)?;
            thm21_evaluate(family, &frame, &CoefficientPairs::new(pairs)?, tol)?
        }
        TheoremId::Thm22 => {
            let p = require(args.p, "p", id)?;
            let q = require(args.q, "q", id)?;
            let c_real = DiskConstraint::new(r, s, p, Axis::RealAxis, anchor.clone())?;
            let c_imag = DiskConstraint::new(r, s, q, Axis::ImagAxis, anchor.clone())?;
            thm22_evaluate(family, &c_real, &c_imag, tol)?
        }
        TheoremId::Cor23 => cor23_evaluate(family, r, s, anchor, tol)?,
        TheoremId::Thm24 => {
            let p = require(args.p, "p", id)?;
            let c = DiskConstraint::new(r, s, p, Axis::RealAxis, anchor.clone())?;
            thm24_evaluate(family, &c, tol)?
        }
        TheoremId::Thm25 => thm25_evaluate(family, r, s, anchor, tol)?,
        TheoremId::Thm26 => {
            let m = require(args.m, "m", id)?;
            let upper = require(args.upper, "M", id)?;
            let l = require(args.l, "l", id)?;
            let upper_l = require(args.upper_l, "L", id)?;
            let frame = OrthonormalFrame::new(vec![anchor.clone()], tol)?;
            let b_real = BallConstraint::new(m, upper, Axis::RealAxis, anchor.clone())?;
            let b_imag = BallConstraint::new(l, upper_l, Axis::ImagAxis, anchor.clone())?;
            thm26_evaluate(family, &frame, &[b_real], &[b_imag], false, tol)?
        }
        TheoremId::Thm27 => {
            let raw = args
                .radii
                .as_deref()
                .ok_or_else(|| CliError::Input("thm27 requires --radii".into()))?;
            let mut radii = parse_float_list(raw, "radii")?;
            if radii.len() == 1 {
                radii = vec![radii[0]; family.len()];
            }
            thm27_evaluate(family, anchor, &RadiiList::new(radii)?, tol)?
        }
        TheoremId::Thm28 => thm28_evaluate(family, anchor, require(args.p, "p", id)?, tol)?,
        TheoremId::Cor29 => cor29_evaluate(family, anchor, tol)?,
        TheoremId::Thm210 => {
            let m = require(args.m, "m", id)?;
            let upper = require(args.upper, "M", id)?;
            let c = BallConstraint::new(m, upper, Axis::RealAxis, anchor.clone())?;
            thm210_evaluate(family, &c, tol)?
        }
        TheoremId::Thm31 => {
            let (x1, x2) = pair(family)?;
            let p = require(args.p, "p", id)?;
            let c = DiskConstraint::new(r, s, p, Axis::RealAxis, anchor.clone())?;
            schwarz31_evaluate(&x1, &x2, &c, tol)?
        }
        TheoremId::Cor32 => {
            let (x, y) = pair(family)?;
            cor32_evaluate(&x, &y, r, s, anchor, tol)?
        }
        TheoremId::Cor33 => {
            let (x1, x2) = pair(family)?;
            let m = require(args.m, "m", id)?;
            let upper = require(args.upper, "M", id)?;
            let c = BallConstraint::new(m, upper, Axis::RealAxis, anchor.clone())?;
            cor33_evaluate(&x1, &x2, &c, tol)?
        }
    };
    Ok(report)
}

pub fn cmd_verify(args: &VerifyArgs) -> CliResult<i32> {
    let id = parse_theorem(&args.theorem)?;
    let tol = args.tolerance()?;
    let raw = std::fs::read_to_string(&args.input)?;
    let doc: FamilyDocument = serde_json::from_str(&raw)?;
    let anchor = doc.anchor_unit(&tol)?;
    let families = doc.to_families(&tol)?;

    let rows = families
        .iter()
        .map(|family| {
            let report = evaluate_family(id, family, &anchor, args, &tol)?;
            Ok(ReportRow {
                theorem_id: id.as_str().to_string(),
                n: family.len(),
                dim: family.dim(),
                field: family.field(),
                report,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;

    let summary = RunRecord::summarize(&rows, args.tol_abs, args.tol_rel);
    let violations = summary.violations;

    match args.format.as_str() {
        "json" => {
            let record = RunRecord {
                command: "verify".into(),
                version: VERSION.into(),
                spec: serde_json::json!({
                    "theorem": id.as_str(),
                    "r": args.r, "s": args.s, "p": args.p, "q": args.q,
                    "m": args.m, "M": args.upper, "l": args.l, "L": args.upper_l,
                    "radii": args.radii, "coeffs": args.coeffs,
                    "tol_abs": args.tol_abs, "tol_rel": args.tol_rel,
                }),
                reports: rows,
                summary,
            };
            emit(args.out.as_ref(), &to_json(&record)?)?;
        }
        "csv" => {
            let mut lines = vec![CSV_HEADER.to_string()];
            lines.extend(rows.iter().map(|row| csv_line(row, args.tol_abs)));
            emit(args.out.as_ref(), &lines.join("\n"))?;
        }
        other => {
            return Err(CliError::Input(format!(
                "--format must be json or csv, got {other:?}"
            )))
        }
    }

    Ok(if violations > 0 { 1 } else { 0 })
}

// ---------------------------------------------------------------------------
// sample

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    /// disk | ball | zero-sum
    #[arg(long)]
    pub sampler: String,
    #[arg(long)]
    pub dim: usize,
    /// Vectors per family.
    #[arg(long)]
    pub n: usize,
    /// Number of families to draw.
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    #[arg(long, default_value = "real", value_parser = parse_field)]
    pub field: Field,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    #[arg(long, default_value_t = 1.0)]
    pub s: f64,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub m: Option<f64>,
    #[arg(long = "M")]
    pub upper: Option<f64>,
    /// Member scale for the zero-sum sampler.
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn cmd_sample(args: &SampleArgs) -> CliResult<i32> {
    let tol = Tolerance::default();
    let anchor = UnitVector::basis(args.dim, 0, args.field)?;
    let base = Seed::new(args.seed);

    let mut families = Vec::with_capacity(args.count as usize);
    for i in 0..args.count {
        let seed = base.derive(i);
        let family = match args.sampler.as_str() {
            "disk" => {
                let p = args
                    .p
                    .ok_or_else(|| CliError::Input("disk sampler requires --p".into()))?;
                let c = DiskConstraint::new(args.r, args.s, p, Axis::RealAxis, anchor.clone())?;
                sample_in_disk(
                    &SampleSpec {
                        dim: args.dim,
                        n: args.n,
                        field: args.field,
                        constraint: SampleConstraint::Disk(c),
                        seed,
                    },
                    &tol,
                )?
            }
            "ball" => {
                let m = args
                    .m
                    .ok_or_else(|| CliError::Input("ball sampler requires --m".into()))?;
                let upper = args
                    .upper
                    .ok_or_else(|| CliError::Input("ball sampler requires --M".into()))?;
                let c = BallConstraint::new(m, upper, Axis::RealAxis, anchor.clone())?;
                sample_in_ball(
                    &SampleSpec {
                        dim: args.dim,
                        n: args.n,
                        field: args.field,
                        constraint: SampleConstraint::Ball(c),
                        seed,
                    },
                    &tol,
                )?
            }
            "zero-sum" => {
                sample_zero_sum(args.dim, args.n, args.field, args.scale, seed, &tol)?
            }
            other => {
                return Err(CliError::Input(format!(
                    "--sampler must be disk, ball or zero-sum, got {other:?}"
                )))
            }
        };
        families.push(family);
    }

    let doc = FamilyDocument::from_families(args.field, args.dim, Some(&anchor), &families);
    emit(args.out.as_ref(), &to_json(&doc)?)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// extremal

#[derive(Debug, Clone, Args)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub theorem: String,
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "real", value_parser = parse_field)]
    pub field: Field,
    #[arg(long, default_value_t = 8)]
    pub restarts: u32,
    #[arg(long, default_value_t = 2000)]
    pub budget: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    #[arg(long, default_value_t = 1.0)]
    pub s: f64,
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long, default_value_t = 1.0)]
    pub q: f64,
    #[arg(long, default_value_t = 0.5)]
    pub m: f64,
    #[arg(long = "M", default_value_t = 1.5)]
    pub upper: f64,
    /// Comma list of p values; runs one search per value.
    #[arg(long)]
    pub sweep_p: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the best family of each search as a family document.
    #[arg(long)]
    pub families_out: Option<PathBuf>,
}

pub fn cmd_extremal(args: &ExtremalArgs) -> CliResult<i32> {
    let id = parse_theorem(&args.theorem)?;
    let mut config = SearchConfig::new(id, args.dim, args.n, args.field);
    config.restarts = args.restarts;
    config.budget = args.budget;
    config.seed = Seed::new(args.seed);
    config.params.r = args.r;
    config.params.s = args.s;
    config.params.p = args.p;
    config.params.q = args.q;
    config.params.lower = args.m;
    config.params.upper = args.upper;

    let p_values: Vec<Option<f64>> = match &args.sweep_p {
        None => vec![None],
        Some(raw) => parse_float_list(raw, "sweep-p")?
            .into_iter()
            .map(Some)
            .collect(),
    };
    let grid: Vec<SearchConfig> = p_values
        .iter()
        .map(|p| {
            let mut cell = config.clone();
            if let Some(p) = p {
                cell.params.p = *p;
            }
            cell
        })
        .collect();

    let results = sharpness_sweep(&grid);
    // A single search that fails is a structural error; in a sweep, failed
    // cells are recorded in place so the rest of the grid survives.
    if p_values.len() == 1 {
        if let Err(e) = &results[0] {
            return Err(CliError::from(clone_error(e)));
        }
    }

    let outcomes: Vec<ExtremalOutcome> = p_values
        .iter()
        .zip(results)
        .map(|(p, res)| ExtremalOutcome {
            p: *p,
            outcome: res.map_err(|e| e.to_string()),
        })
        .collect();

    if let Some(path) = &args.families_out {
        let families: Vec<VectorFamily> = outcomes
            .iter()
            .filter_map(|o| o.outcome.as_ref().ok())
            .map(|t| t.best_family.clone())
            .collect();
        if families.is_empty() {
            return Err(CliError::Structural(
                "no search produced a family to write".into(),
            ));
        }
        let doc = FamilyDocument::from_families(args.field, args.dim, None, &families);
        write_atomic(path, &to_json(&doc)?)?;
    }

    let record = ExtremalRecord {
        command: "extremal".into(),
        version: VERSION.into(),
        spec: serde_json::to_value(&config)?,
        outcomes,
    };
    emit(args.out.as_ref(), &to_json(&record)?)?;
    Ok(0)
}

// revineq::Error is not Clone; rebuild the only piece we need.
fn clone_error(e: &revineq::Error) -> revineq::Error {
    match e {
        revineq::Error::UnsupportedTheorem(id) => revineq::Error::UnsupportedTheorem(*id),
        revineq::Error::InvalidParameter(m) => revineq::Error::InvalidParameter(m.clone()),
        other => revineq::Error::Infeasible(other.to_string()),
    }
}

// ---------------------------------------------------------------------------
// report

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    /// One or more verify run records (JSON).
    #[arg(long = "in", required = true, num_args = 1..)]
    pub inputs: Vec<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-9)]
    pub tol_abs: f64,
}

pub fn cmd_report(args: &ReportArgs) -> CliResult<i32> {
    let mut rows: Vec<ReportRow> = Vec::new();
    for path in &args.inputs {
        let raw = std::fs::read_to_string(path)?;
        let record: RunRecord = serde_json::from_str(&raw)?;
        rows.extend(record.reports);
    }
    // stable: ties keep input order
    rows.sort_by(|a, b| a.theorem_id.cmp(&b.theorem_id));

    let mut lines = vec![CSV_HEADER.to_string()];
    lines.extend(rows.iter().map(|row| csv_line(row, args.tol_abs)));
    emit(args.out.as_ref(), &lines.join("\n"))?;
    Ok(0)
}

//! Multi-start derivative-free search for configurations that make a bound
//! tight (lhs/rhs → 1).
//!
//! The search is a compass pattern search over the flattened real coordinates
//! of the family: perturb one coordinate at a time by ±step, project the
//! candidate back onto the feasible set, accept on improvement, halve the
//! step when a full sweep yields none. Objectives here are piecewise-smooth
//! (minima over family members) and projections are cheap, so derivative-free
//! search is a better fit than gradient methods.

use serde::{Deserialize, Serialize};

use crate::bounds::{
    cor23_evaluate, cor29_evaluate, cor33_evaluate, dm_evaluate, schwarz31_evaluate,
    thm210_evaluate, thm24_evaluate, thm25_evaluate, thm28_evaluate, BoundReport, TheoremId,
};
use crate::constraints::{Axis, BallConstraint, DiskConstraint};
use crate::rng::substream;
use crate::space::{Field, Scalar, Tolerance, UnitVector, Vector, VectorFamily};
use crate::witnesses::{
    gaussian_vector, project_to_ball, project_to_disk, sample_in_ball, sample_in_disk,
    sample_zero_sum, SampleConstraint, SampleSpec, Seed,
};
use crate::{Error, Result};

/// Hard cap on `restarts × budget` to keep any single search bounded.
pub const GLOBAL_EVAL_CAP: u64 = 10_000_000;

/// Scalar constraint parameters; which ones apply depends on the theorem.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Params {
    pub r: f64,
    pub s: f64,
    pub p: f64,
    pub q: f64,
    /// ball lower bound m
    pub lower: f64,
    /// ball upper bound M
    pub upper: f64,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            r: 1.0,
            s: 1.0,
            p: 1.0,
            q: 1.0,
            lower: 0.5,
            upper: 1.5,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchConfig {
    pub theorem_id: TheoremId,
    pub params: Params,
    pub dim: usize,
    pub n: usize,
    pub field: Field,
    pub restarts: u32,
    pub budget: u32,
    pub step_init: f64,
    pub step_min: f64,
    pub seed: Seed,
}

impl SearchConfig {
    pub fn new(theorem_id: TheoremId, dim: usize, n: usize, field: Field) -> Self {
        SearchConfig {
            theorem_id,
            params: Params::default(),
            dim,
            n,
            field,
            restarts: 8,
            budget: 2000,
            step_init: 0.5,
            step_min: 1e-6,
            seed: Seed::new(0),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 || self.n == 0 {
            return Err(Error::InvalidParameter(
                "dim and n must be at least 1".into(),
            ));
        }
        if self.restarts == 0 || self.budget == 0 {
            return Err(Error::InvalidParameter(
                "restarts and budget must be at least 1".into(),
            ));
        }
        if self.restarts as u64 * self.budget as u64 > GLOBAL_EVAL_CAP {
            return Err(Error::InvalidParameter(format!(
                "restarts × budget exceeds the global cap of {GLOBAL_EVAL_CAP}"
            )));
        }
        if !(self.step_init > 0.0 && self.step_min > 0.0 && self.step_min <= self.step_init) {
            return Err(Error::InvalidParameter(
                "steps must satisfy 0 < step_min ≤ step_init".into(),
            ));
        }
        Ok(())
    }
}

/// Best configuration found by [`maximize_tightness`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TightnessResult {
    pub best_family: VectorFamily,
    /// lhs/rhs of the best report; 1 means the bound is tight.
    pub best_ratio: f64,
    pub report: BoundReport,
    pub evaluations_used: u32,
    /// (evaluation count, ratio) at each improvement; nondecreasing ratios.
    pub trace: Vec<(u32, f64)>,
    /// True when the best report had rhs ≤ tol, making the ratio meaningless.
    pub flagged: bool,
}

enum Problem {
    Dm { anchor: UnitVector },
    TwoDisks { c_real: DiskConstraint, c_imag: DiskConstraint, cor23: Option<(f64, f64)> },
    OneDisk { c: DiskConstraint },
    ZeroSum { r: f64, s: f64, anchor: UnitVector },
    AdditiveDisk { anchor: UnitVector, p: f64, cor29: bool },
    Ball { c: BallConstraint, schwarz: bool },
    SchwarzDisk { c: DiskConstraint },
}

fn build_problem(config: &SearchConfig) -> Result<Problem> {
    let anchor = UnitVector::basis(config.dim, 0, config.field)?;
    let Params {
        r,
        s,
        p,
        q,
        lower,
        upper,
    } = config.params;
    match config.theorem_id {
        TheoremId::Dm => Ok(Problem::Dm { anchor }),
        TheoremId::Thm22 => Ok(Problem::TwoDisks {
            c_real: DiskConstraint::new(r, s, p, Axis::RealAxis, anchor.clone())?,
            c_imag: DiskConstraint::new(r, s, q, Axis::ImagAxis, anchor)?,
            cor23: None,
        }),
        TheoremId::Cor23 => Ok(Problem::TwoDisks {
            c_real: DiskConstraint::new(r, s, r, Axis::RealAxis, anchor.clone())?,
            c_imag: DiskConstraint::new(r, s, s, Axis::ImagAxis, anchor)?,
            cor23: Some((r, s)),
        }),
        TheoremId::Thm24 => Ok(Problem::OneDisk {
            c: DiskConstraint::new(r, s, p, Axis::RealAxis, anchor)?,
        }),
        TheoremId::Thm25 => Ok(Problem::ZeroSum { r, s, anchor }),
        TheoremId::Thm28 => Ok(Problem::AdditiveDisk {
            anchor,
            p,
            cor29: false,
        }),
        TheoremId::Cor29 => Ok(Problem::AdditiveDisk {
            anchor,
            p: 1.0,
            cor29: true,
        }),
        TheoremId::Thm210 => Ok(Problem::Ball {
            c: BallConstraint::new(lower, upper, Axis::RealAxis, anchor)?,
            schwarz: false,
        }),
        TheoremId::Thm31 => Ok(Problem::SchwarzDisk {
            c: DiskConstraint::new(r, s, p, Axis::RealAxis, anchor)?,
        }),
        TheoremId::Cor33 => Ok(Problem::Ball {
            c: BallConstraint::new(lower, upper, Axis::RealAxis, anchor)?,
            schwarz: true,
        }),
        other => Err(Error::UnsupportedTheorem(other)),
    }
}

fn pair_size(problem: &Problem) -> Option<usize> {
    match problem {
        Problem::SchwarzDisk { .. } => Some(2),
        Problem::Ball { schwarz: true, .. } => Some(2),
        _ => None,
    }
}

fn encode(members: &[Vector], field: Field) -> Vec<f64> {
    let mut out = Vec::new();
    for v in members {
        for c in v.coords() {
            out.push(c.re);
            if field == Field::Complex {
                out.push(c.im);
            }
        }
    }
    out
}

fn decode(xs: &[f64], dim: usize, n: usize, field: Field) -> Result<Vec<Vector>> {
    let per = match field {
        Field::Real => dim,
        Field::Complex => 2 * dim,
    };
    debug_assert_eq!(xs.len(), n * per);
    let mut members = Vec::with_capacity(n);
    for k in 0..n {
        let chunk = &xs[k * per..(k + 1) * per];
        let coords = (0..dim)
            .map(|j| match field {
                Field::Real => Scalar::new(chunk[j], 0.0),
                Field::Complex => Scalar::new(chunk[2 * j], chunk[2 * j + 1]),
            })
            .collect();
        members.push(Vector::new(coords, field)?);
    }
    Ok(members)
}

fn project(problem: &Problem, members: Vec<Vector>) -> Result<Vec<Vector>> {
    match problem {
        Problem::Dm { .. } => Ok(members),
        Problem::OneDisk { c } | Problem::SchwarzDisk { c } => members
            .into_iter()
            .map(|x| project_to_disk(&x, c))
            .collect(),
        Problem::AdditiveDisk { anchor, p, .. } => {
            let c = DiskConstraint::new(1.0, 1.0, *p, Axis::RealAxis, anchor.clone())?;
            members
                .into_iter()
                .map(|x| project_to_disk(&x, &c))
                .collect()
        }
        Problem::Ball { c, .. } => members
            .into_iter()
            .map(|x| project_to_ball(&x, c))
            .collect(),
        Problem::TwoDisks { c_real, c_imag, .. } => members
            .into_iter()
            .map(|x| {
                let mut y = x;
                for _ in 0..50 {
                    y = project_to_disk(&y, c_real)?;
                    y = project_to_disk(&y, c_imag)?;
                    let in_real = crate::constraints::disk_margin(&y, c_real)?.value >= -1e-12;
                    let in_imag = crate::constraints::disk_margin(&y, c_imag)?.value >= -1e-12;
                    if in_real && in_imag {
                        break;
                    }
                }
                Ok(y)
            })
            .collect(),
        Problem::ZeroSum { .. } => {
            let n = members.len();
            let mut sum = Vector::zero(members[0].dim(), members[0].field())?;
            for x in &members {
                sum = sum.add(x)?;
            }
            let mean = sum.scale(1.0 / n as f64);
            members.into_iter().map(|x| x.sub(&mean)).collect()
        }
    }
}

fn evaluate(problem: &Problem, members: &[Vector], tol: &Tolerance) -> Result<BoundReport> {
    match problem {
        Problem::SchwarzDisk { c } => schwarz31_evaluate(&members[0], &members[1], c, tol),
        Problem::Ball { c, schwarz: true } => {
            cor33_evaluate(&members[0], &members[1], c, tol)
        }
        _ => {
            let family = VectorFamily::new(members.to_vec(), tol)?;
            match problem {
                Problem::Dm { anchor } => dm_evaluate(&family, anchor, tol),
                Problem::TwoDisks {
                    c_real,
                    c_imag,
                    cor23,
                } => match cor23 {
                    Some((r, s)) => cor23_evaluate(&family, *r, *s, &c_real.anchor, tol),
                    None => crate::bounds::thm22_evaluate(&family, c_real, c_imag, tol),
                },
                Problem::OneDisk { c } => thm24_evaluate(&family, c, tol),
                Problem::ZeroSum { r, s, anchor } => thm25_evaluate(&family, *r, *s, anchor, tol),
                Problem::AdditiveDisk { anchor, p, cor29 } => {
                    if *cor29 {
                        cor29_evaluate(&family, anchor, tol)
                    } else {
                        thm28_evaluate(&family, anchor, *p, tol)
                    }
                }
                Problem::Ball { c, .. } => thm210_evaluate(&family, c, tol),
                Problem::SchwarzDisk { .. } => unreachable!(),
            }
        }
    }
}

/// Ratio normalization: lhs/rhs so 1 means tight; rhs ≤ tol scores 0, flagged.
fn ratio_of(report: &BoundReport, tol: &Tolerance) -> (f64, bool) {
    if report.rhs.abs() <= tol.abs {
        (0.0, true)
    } else {
        (report.lhs / report.rhs, false)
    }
}

fn initial_members(
    problem: &Problem,
    config: &SearchConfig,
    restart_seed: Seed,
    tol: &Tolerance,
) -> Result<Vec<Vector>> {
    let n = pair_size(problem).unwrap_or(config.n);
    match problem {
        Problem::Dm { .. } => {
            let mut rng = substream(restart_seed.value, 0);
            let members = (0..n)
                .map(|_| loop {
                    let g = gaussian_vector(&mut rng, config.dim, config.field);
                    if !g.is_zero(tol.nonzero) {
                        break g;
                    }
                })
                .collect::<Vec<_>>();
            Ok(members)
        }
        Problem::OneDisk { c } | Problem::SchwarzDisk { c } => {
            let spec = SampleSpec {
                dim: config.dim,
                n,
                field: config.field,
                constraint: SampleConstraint::Disk(c.clone()),
                seed: restart_seed,
            };
            Ok(sample_in_disk(&spec, tol)?.members().to_vec())
        }
        Problem::AdditiveDisk { anchor, p, .. } => {
            let c = DiskConstraint::new(1.0, 1.0, *p, Axis::RealAxis, anchor.clone())?;
            let spec = SampleSpec {
                dim: config.dim,
                n,
                field: config.field,
                constraint: SampleConstraint::Disk(c),
                seed: restart_seed,
            };
            Ok(sample_in_disk(&spec, tol)?.members().to_vec())
        }
        Problem::Ball { c, .. } => {
            let spec = SampleSpec {
                dim: config.dim,
                n,
                field: config.field,
                constraint: SampleConstraint::Ball(c.clone()),
                seed: restart_seed,
            };
            Ok(sample_in_ball(&spec, tol)?.members().to_vec())
        }
        Problem::TwoDisks { c_real, .. } => {
            // sample the real disk, then project into the intersection
            for attempt in 0..100 {
                let spec = SampleSpec {
                    dim: config.dim,
                    n,
                    field: config.field,
                    constraint: SampleConstraint::Disk(c_real.clone()),
                    seed: restart_seed.derive(attempt),
                };
                let members = sample_in_disk(&spec, tol)?.members().to_vec();
                let projected = project(problem, members)?;
                if projected.iter().all(|x| !x.is_zero(tol.nonzero)) {
                    if let Ok(rep) = evaluate(problem, &projected, tol) {
                        if rep.hypotheses_ok {
                            return Ok(projected);
                        }
                    }
                }
            }
            Err(Error::Infeasible(
                "no feasible start found in the disk intersection".into(),
            ))
        }
        Problem::ZeroSum { .. } => Ok(sample_zero_sum(
            config.dim,
            n.max(2),
            config.field,
            1.0,
            restart_seed,
            tol,
        )?
        .members()
        .to_vec()),
    }
}

/// Multi-start compass search for the configuration maximizing lhs/rhs.
pub fn maximize_tightness(config: &SearchConfig) -> Result<TightnessResult> {
    maximize_with_tol(config, &Tolerance::default())
}

pub fn maximize_with_tol(config: &SearchConfig, tol: &Tolerance) -> Result<TightnessResult> {
    config.validate()?;
    let problem = build_problem(config)?;
    let n = pair_size(&problem).unwrap_or(config.n);

    let mut best: Option<(f64, bool, Vec<Vector>, BoundReport)> = None;
    let mut trace: Vec<(u32, f64)> = Vec::new();
    let mut total_evals: u32 = 0;
    let mut start_errors: Option<Error> = None;

    for restart in 0..config.restarts {
        let restart_seed = config.seed.derive(restart as u64);
        let start = match initial_members(&problem, config, restart_seed, tol) {
            Ok(m) => m,
            Err(e) => {
                start_errors = Some(e);
                continue;
            }
        };
        let start = project(&problem, start)?;
        let mut xs = encode(&start, config.field);
        let report = match evaluate(&problem, &start, tol) {
            Ok(r) if r.hypotheses_ok => r,
            _ => continue,
        };
        total_evals += 1;
        let (mut cur_ratio, mut cur_flag) = ratio_of(&report, tol);
        let mut cur_members = start;
        let mut cur_report = report;

        let improves = |r: f64, best: &Option<(f64, bool, Vec<Vector>, BoundReport)>| match best {
            None => true,
            Some((b, _, _, _)) => r > *b,
        };
        if improves(cur_ratio, &best) {
            trace.push((total_evals, cur_ratio));
            best = Some((cur_ratio, cur_flag, cur_members.clone(), cur_report.clone()));
        }

        let mut step = config.step_init;
        let mut evals_here: u32 = 1;
        'search: while step >= config.step_min && evals_here < config.budget {
            let mut improved = false;
            for i in 0..xs.len() {
                for sign in [1.0, -1.0] {
                    if evals_here >= config.budget {
                        break 'search;
                    }
                    let mut cand = xs.clone();
                    cand[i] += sign * step;
                    let members = match decode(&cand, config.dim, n, config.field) {
                        Ok(m) => m,
                        Err(_) => continue,
                    };
                    let members = match project(&problem, members) {
                        Ok(m) => m,
                        Err(_) => continue,
                    };
                    evals_here += 1;
                    total_evals += 1;
                    let rep = match evaluate(&problem, &members, tol) {
                        Ok(r) if r.hypotheses_ok => r,
                        _ => continue,
                    };
                    let (ratio, flag) = ratio_of(&rep, tol);
                    if ratio > cur_ratio {
                        cur_ratio = ratio;
                        cur_flag = flag;
                        xs = encode(&members, config.field);
                        cur_members = members;
                        cur_report = rep;
                        improved = true;
                        if improves(cur_ratio, &best) {
                            trace.push((total_evals, cur_ratio));
                            best = Some((
                                cur_ratio,
                                cur_flag,
                                cur_members.clone(),
                                cur_report.clone(),
                            ));
                        }
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
    }

    match best {
        Some((ratio, flagged, members, report)) => Ok(TightnessResult {
            best_family: VectorFamily::new(members, tol)?,
            best_ratio: ratio,
            report,
            evaluations_used: total_evals,
            trace,
            flagged,
        }),
        None => Err(start_errors.unwrap_or_else(|| {
            Error::Infeasible("no hypothesis-satisfying start found".into())
        })),
    }
}

/// One [`maximize_tightness`] run per grid cell, with per-cell derived seeds;
/// per-cell errors are recorded in place and do not abort the sweep.
pub fn sharpness_sweep(grid: &[SearchConfig]) -> Vec<Result<TightnessResult>> {
    grid.iter()
        .enumerate()
        .map(|(i, cfg)| {
            let mut cell = cfg.clone();
            cell.seed = cfg.seed.derive(i as u64);
            maximize_tightness(&cell)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm24_search_approaches_equality() {
        let mut config = SearchConfig::new(TheoremId::Thm24, 4, 2, Field::Real);
        config.restarts = 8;
        config.budget = 2000;
        let result = maximize_tightness(&config).unwrap();
        assert!(
            result.best_ratio >= 0.999,
            "best ratio {} below 0.999",
            result.best_ratio
        );
        assert!(result.best_ratio <= 1.0 + 1e-7);
        assert!(result.report.hypotheses_ok);
        // trace ratios are nondecreasing
        for w in result.trace.windows(2) {
            assert!(w[1].1 >= w[0].1);
        }
    }

    #[test]
    fn search_is_deterministic() {
        let config = SearchConfig::new(TheoremId::Thm25, 2, 2, Field::Real);
        let a = maximize_tightness(&config).unwrap();
        let b = maximize_tightness(&config).unwrap();
        assert_eq!(a.best_ratio, b.best_ratio);
        assert_eq!(a.evaluations_used, b.evaluations_used);
        assert_eq!(
            a.best_family.members()[0].coords(),
            b.best_family.members()[0].coords()
        );
    }

    #[test]
    fn thm25_search_tightens() {
        let mut config = SearchConfig::new(TheoremId::Thm25, 2, 2, Field::Real);
        config.budget = 3000;
        let result = maximize_tightness(&config).unwrap();
        assert!(result.best_ratio >= 0.99, "got {}", result.best_ratio);
        assert!(result.best_ratio <= 1.0 + 1e-7);
    }

    #[test]
    fn sweep_preserves_grid_order_and_isolates_errors() {
        let mut grid = Vec::new();
        for p in [0.25, 0.5, 0.75, 1.0] {
            let mut cfg = SearchConfig::new(TheoremId::Thm24, 2, 1, Field::Real);
            cfg.params.p = p;
            cfg.restarts = 2;
            cfg.budget = 500;
            grid.push(cfg);
        }
        // an unsupported theorem in the middle must not abort the sweep
        grid.insert(2, {
            let mut cfg = SearchConfig::new(TheoremId::Thm21, 2, 1, Field::Real);
            cfg.restarts = 1;
            cfg.budget = 10;
            cfg
        });
        let results = sharpness_sweep(&grid);
        assert_eq!(results.len(), 5);
        assert!(results[2].is_err());
        for (i, r) in results.iter().enumerate() {
            if i != 2 {
                let r = r.as_ref().unwrap();
                assert!(r.best_ratio > 0.95, "cell {i}: {}", r.best_ratio);
            }
        }
    }

    #[test]
    fn unsupported_theorems_error() {
        let config = SearchConfig::new(TheoremId::Thm26, 2, 1, Field::Complex);
        assert!(matches!(
            maximize_tightness(&config),
            Err(Error::UnsupportedTheorem(TheoremId::Thm26))
        ));
    }

    #[test]
    fn no_ratio_exceeds_one_materially() {
        for id in [TheoremId::Dm, TheoremId::Thm24, TheoremId::Thm210] {
            let mut config = SearchConfig::new(id, 3, 2, Field::Real);
            config.restarts = 2;
            config.budget = 400;
            let result = maximize_tightness(&config).unwrap();
            assert!(result.best_ratio <= 1.0 + 1e-7, "{id}: {}", result.best_ratio);
        }
    }
}

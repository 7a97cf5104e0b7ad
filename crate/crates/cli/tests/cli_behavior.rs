//! End-to-end behavior of the binary: exit codes, CSV shape, report
//! aggregation, and input validation.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_revineq")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn sample_to(path: &Path, field: &str) {
    let out = run(&[
        "sample", "--sampler", "disk", "--dim", "2", "--n", "3", "--count", "2", "--field",
        field, "--seed", "3", "--p", "0.5", "--out", &path.to_string_lossy(),
    ]);
    assert!(out.status.success());
}

#[test]
fn unknown_theorem_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let fams = dir.path().join("f.json");
    sample_to(&fams, "real");
    let out = run(&["verify", "--theorem", "thm99", "--in", &fams.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_json_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let fams = dir.path().join("broken.json");
    std::fs::write(&fams, "{ not json").unwrap();
    let out = run(&["verify", "--theorem", "dm", "--in", &fams.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_required_parameter_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let fams = dir.path().join("f.json");
    sample_to(&fams, "real");
    // thm24 needs --p
    let out = run(&["verify", "--theorem", "thm24", "--in", &fams.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn imaginary_axis_in_real_field_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let fams = dir.path().join("f.json");
    sample_to(&fams, "real");
    // the two-disk bound needs an imaginary-axis constraint, impossible over ℝ
    let out = run(&[
        "verify", "--theorem", "thm22", "--in", &fams.to_string_lossy(), "--p", "1", "--q", "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unsupported_extremal_theorem_exits_3() {
    let out = run(&["extremal", "--theorem", "thm26", "--dim", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_csv_has_expected_shape() {
    let dir = tempfile::tempdir().unwrap();
    let fams = dir.path().join("f.json");
    sample_to(&fams, "complex");
    let out = run(&[
        "verify", "--theorem", "thm24", "--in", &fams.to_string_lossy(), "--p", "0.5",
        "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines[0], "theorem_id,n,dim,field,lhs,rhs,slack,ratio,hypotheses_ok");
    assert_eq!(lines.len(), 3, "header + one row per family");
    for row in &lines[1..] {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 9);
        assert_eq!(cols[0], "thm24");
        assert_eq!(cols[8], "true");
    }
}

#[test]
fn report_merges_and_sorts_records() {
    let dir = tempfile::tempdir().unwrap();
    let fams = dir.path().join("f.json");
    sample_to(&fams, "complex");
    let rec_a = dir.path().join("a.json");
    let rec_b = dir.path().join("b.json");
    // two records with different theorem ids, fed in reverse order
    let out = run(&[
        "verify", "--theorem", "thm24", "--in", &fams.to_string_lossy(), "--p", "0.5",
        "--out", &rec_a.to_string_lossy(),
    ]);
    assert!(out.status.success());
    let out = run(&[
        "verify", "--theorem", "dm", "--in", &fams.to_string_lossy(),
        "--out", &rec_b.to_string_lossy(),
    ]);
    assert!(out.status.success());

    let out = run(&[
        "report", "--in", &rec_a.to_string_lossy(), "--in", &rec_b.to_string_lossy(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let ids: Vec<&str> = text
        .trim()
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(ids, ["dm", "dm", "thm24", "thm24"], "rows sorted by theorem id");
}

#[test]
fn sample_then_verify_zero_sum_family() {
    let dir = tempfile::tempdir().unwrap();
    let fams = dir.path().join("z.json");
    let out = run(&[
        "sample", "--sampler", "zero-sum", "--dim", "3", "--n", "4", "--count", "3",
        "--field", "complex", "--seed", "9", "--scale", "0.8", "--out",
        &fams.to_string_lossy(),
    ]);
    assert!(out.status.success());
    let out = run(&["verify", "--theorem", "thm25", "--in", &fams.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn extremal_sweep_records_one_outcome_per_p() {
    let dir = tempfile::tempdir().unwrap();
    let rec = dir.path().join("sweep.json");
    let out = run(&[
        "extremal", "--theorem", "thm24", "--dim", "2", "--n", "2", "--restarts", "2",
        "--budget", "150", "--sweep-p", "0.25,0.5,1.0", "--out", &rec.to_string_lossy(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let record: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&rec).unwrap()).unwrap();
    let outcomes = record["outcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), 3);
    for (outcome, p) in outcomes.iter().zip([0.25, 0.5, 1.0]) {
        assert_eq!(outcome["p"].as_f64().unwrap(), p);
        assert!(outcome["outcome"]["Ok"]["best_ratio"].as_f64().unwrap() > 0.5);
    }
}

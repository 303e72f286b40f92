//! End-to-end runs of the binary: exit codes, report contents and output formats.

use std::process::{Command, Output};

use cherednik_howe::report::{Report, Status};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cherednik-howe")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Report) {
    let out = run(args);
    let code = out.status.code().expect("exit code");
    let report: Report = serde_json::from_slice(&out.stdout).expect("stdout is a JSON report");
    (code, report)
}

fn entry<'a>(r: &'a Report, id: &str) -> &'a cherednik_howe::report::Entry {
    r.entries.iter().find(|e| e.id == id).unwrap_or_else(|| panic!("no entry {id}"))
}

#[test]
fn verify_small_parameter_passes() {
    let (code, r) = report(&["verify", "--m", "3", "--tau", "triv", "--c", "1/10", "--max-degree", "8"]);
    assert_eq!(code, 0);
    assert_eq!(r.summary.failed, 0);
    assert!(r.summary.passed > 100);
    assert_eq!(r.config["m"], 3);
    assert_eq!(r.config["command"], "verify");
}

#[test]
fn order_below_three_is_a_usage_error() {
    let out = run(&["verify", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("m must be ≥ 3"));
    assert!(out.stdout.is_empty());
}

#[test]
fn invalid_configurations_exit_with_two() {
    for args in [
        vec!["verify", "--m", "3", "--tau", "chi0"],
        vec!["verify", "--m", "5", "--tau", "rho:3"],
        vec!["verify", "--m", "4", "--tau", "bogus"],
        vec!["verify", "--m", "4", "--max-degree", "25"],
        vec!["verify", "--m", "4", "--c", "one"],
        vec!["verify", "--m", "3", "--c-even", "1/5", "--c-odd", "1/7"],
        vec!["verify", "--m", "4", "--suite", "nope"],
        vec!["frobnicate", "--m", "4"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn split_parameter_superalgebra_suite_passes() {
    let (code, r) = report(&["verify", "--m", "4", "--c-even", "1/5", "--c-odd", "1/7", "--suite", "u21"]);
    assert_eq!(code, 0);
    assert_eq!(r.config["c_even"], "1/5");
    assert_eq!(r.config["c_odd"], "1/7");
    assert!(r.entries.iter().all(|e| e.id.starts_with("super.") || e.id.starts_with("twist.")));
}

#[test]
fn spectrum_spot_value() {
    let (code, r) = report(&["spectrum", "--m", "3", "--c", "1/10", "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert_eq!(entry(&r, "spectrum.k3").data["lambda_squared"], serde_json::json!(["36/5"]));
}

#[test]
fn spectrum_at_zero_parameter_is_plus_minus_k() {
    let (code, r) = report(&["spectrum", "--m", "5", "--max-degree", "6"]);
    assert_eq!(code, 0);
    for k in 1..=6 {
        let lsq = entry(&r, &format!("spectrum.k{k}")).data["lambda_squared"].as_array().unwrap().clone();
        assert!(lsq.iter().all(|v| v == &Value::String((k * k).to_string())), "k={k}: {lsq:?}");
    }
}

#[test]
fn reflection_representation_has_zero_eigenvalue_in_degree_zero() {
    let (code, r) = report(&["spectrum", "--m", "5", "--tau", "rho:1", "--c", "1/4", "--epsilon", "1/2", "--max-degree", "2"]);
    assert_eq!(code, 0);
    let eig = entry(&r, "spectrum.k0").data["eigenvalues"].as_array().unwrap().clone();
    assert_eq!(eig.len(), 2);
    for z in eig {
        assert_eq!(z, serde_json::json!([0.0, 0.0]));
    }
}

#[test]
fn resonance_is_reported_not_failed() {
    let (code, r) = report(&["spectrum", "--m", "3", "--c", "1/3", "--max-degree", "4"]);
    assert_eq!(code, 0);
    let e = entry(&r, "projection.k2");
    assert!(matches!(&e.status, Status::Skipped(why) if why.contains("N_c")));
}

#[test]
fn spinor_weights_and_round_trip() {
    let (code, r) = report(&["spinor", "--m", "3", "--c", "1/10", "--max-degree", "4"]);
    assert_eq!(code, 0);
    let w = &entry(&r, "monogenic.k3.l1").data;
    // N_c = 3/10: (4 - N, -(3 - N), 1/2)
    assert_eq!(w["h"], "37/10");
    assert_eq!(w["z1"], "-27/10");
    assert_eq!(w["z2"], "1/2");
    assert_eq!(entry(&r, "monogenic.k0.l0").data["dim"], 1);

    let (code, r) = report(&["spinor", "--m", "5", "--tau", "rho:1", "--c", "1/4", "--max-degree", "6"]);
    assert_eq!(code, 0);
    assert_eq!(entry(&r, "monogenic.k0.l0").data["dim"], 2);
    assert!(r.entries.iter().filter(|e| e.id.starts_with("mongdecomp.")).all(|e| e.status == Status::Pass));
}

#[test]
fn gram_positivity_and_failure() {
    let (code, _) = report(&["gram", "--m", "4", "--c", "0"]);
    assert_eq!(code, 0);
    let (code, _) = report(&["gram", "--m", "3", "--c", "1/10", "--max-degree", "8"]);
    assert_eq!(code, 0);
    let (code, r) = report(&["gram", "--m", "3", "--c", "2", "--max-degree", "6"]);
    assert_eq!(code, 1);
    let first = entry(&r, "gram.first_failure");
    assert_eq!(first.status, Status::Fail);
    assert!(first.data["first_failure"].is_u64());
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let args = ["spinor", "--m", "4", "--tau", "rho:1", "--c-even", "1/5", "--c-odd", "1/7", "--max-degree", "5"];
    let (_, a) = report(&args);
    let (_, b) = report(&args);
    assert!(a.summary.elapsed_seconds.is_some());
    assert_eq!(a.without_timing(), b.without_timing());
}

#[test]
fn csv_carries_the_json_report() {
    let args = ["spectrum", "--m", "6", "--tau", "chi1", "--c", "1/10", "--epsilon", "-1/2", "--max-degree", "5"];
    let (_, json) = report(&args);
    let mut csv_args = args.to_vec();
    csv_args.extend(["--output", "csv"]);
    let out = run(&csv_args);
    assert_eq!(out.status.code(), Some(0));
    let csv = Report::from_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(csv.without_timing(), json.without_timing());
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["verify", "--m", "5", "--c", "1/3", "--suite", "sl2", "--max-degree", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.summary.failed, 0);
    assert_eq!(r.summary.total, r.entries.len());
}

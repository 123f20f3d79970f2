//! End-to-end tests of the binary: exit codes, JSON shapes and byte
//! determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ellfan"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success, got {:?}\nstdout: {}\nstderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn run_error(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(1), "expected a domain error");
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    doc["error"].clone()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("ellfan-test-{}-{name}", std::process::id()))
}

#[test]
fn validate_reports_a_valid_fan() {
    let fan = fixture("projective_plane.json");
    let doc = run_json(&["validate", fan.to_str().unwrap()]);
    assert_eq!(doc["valid"], true);
    assert_eq!(doc["max_cones"], 3);
    assert_eq!(doc["name"], "projective-plane");
    assert_eq!(doc["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn validate_flags_a_bad_fan() {
    let path = temp_path("bad-fan.json");
    std::fs::write(
        &path,
        r#"{"rank":2,"rays":[[2,0],[0,1]],"max_cones":[[0,1]]}"#,
    )
    .unwrap();
    let doc = run_json(&["validate", path.to_str().unwrap()]);
    assert_eq!(doc["valid"], false);
    assert!(!doc["violations"].as_array().unwrap().is_empty());
    std::fs::remove_file(&path).ok();
}

#[test]
fn fiber_at_the_identity_of_the_line() {
    let fan = fixture("projective_line.json");
    let point = fixture("rank1_identity.json");
    let doc = run_json(&["fiber", fan.to_str().unwrap(), "--point", point.to_str().unwrap()]);
    assert_eq!(doc["dd_zero"], true);
    assert_eq!(doc["total_rank"], 2);
    let table = doc["table"].as_array().unwrap();
    let cell = |p: i64, j: i64, i: i64| -> i64 {
        table
            .iter()
            .find(|c| c["cech"] == p && c["wedge"] == j && c["internal"] == i)
            .map(|c| c["rank"].as_i64().unwrap())
            .unwrap_or(0)
    };
    assert_eq!(cell(0, 0, 0), 2);
    assert_eq!(cell(1, 0, 0), 1);
    assert_eq!(cell(1, 1, 0), 1);
    assert_eq!(doc["cohomology"], serde_json::json!([{"degree": 0, "dim": 2}]));
}

#[test]
fn gamma_of_the_line_is_one_class() {
    let fan = fixture("projective_line.json");
    let doc = run_json(&["gamma", fan.to_str().unwrap()]);
    assert_eq!(doc["cohomology"], serde_json::json!([{"degree": 0, "dim": 1}]));
    assert_eq!(doc["dd_zero"], true);
}

#[test]
fn localize_output_is_byte_identical_across_runs() {
    let fan = fixture("projective_plane.json");
    let point = fixture("rank2_half_0.json");
    let args = ["localize", fan.to_str().unwrap(), "--point", point.to_str().unwrap()];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "output must be deterministic");
    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc["all_agree"], true);
    assert!(doc["probes"].as_array().unwrap().len() >= 2);
}

#[test]
fn point_of_wrong_rank_is_a_domain_error() {
    let fan = fixture("projective_plane.json");
    let point = fixture("rank1_half.json");
    let err = run_error(&["fiber", fan.to_str().unwrap(), "--point", point.to_str().unwrap()]);
    assert_eq!(err["kind"], "ambient-rank-mismatch");
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["fiber", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tsub_reports_the_exact_order() {
    let point = fixture("rank1_sixth.json");
    let doc = run_json(&["tsub", point.to_str().unwrap()]);
    assert_eq!(doc["orders"], serde_json::json!(["6"]));
    assert_eq!(doc["torus_rank"], 0);
    assert_eq!(doc["component_count"], "6");
}

#[test]
fn chart_hh_rejects_non_faces() {
    let fan = fixture("projective_plane.json");
    let err = run_error(&["chart-hh", fan.to_str().unwrap(), "--cone", "0,1,2"]);
    assert_eq!(err["kind"], "not-a-face");
}

#[test]
fn chart_hh_of_a_maximal_cone_is_full() {
    let fan = fixture("projective_plane.json");
    let doc = run_json(&["chart-hh", fan.to_str().unwrap(), "--cone", "0,1"]);
    assert_eq!(doc["term"]["zero"], false);
    assert_eq!(doc["term"]["support"]["full"], true);
    assert_eq!(doc["total_rank"], 1);
}

#[test]
fn pretty_output_lands_in_the_file() {
    let fan = fixture("projective_line.json");
    let path = temp_path("sheaf.json");
    let out = run(&[
        "sheaf",
        fan.to_str().unwrap(),
        "--pretty",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["entry_count"], 3);
    assert_eq!(doc["terms"].as_array().unwrap().len(), 3);
    std::fs::remove_file(&path).ok();
}

#[test]
fn identity_check_requires_completeness() {
    let fan = fixture("affine_plane.json");
    let err = run_error(&["identity-check", fan.to_str().unwrap()]);
    assert_eq!(err["kind"], "not-complete");
}

#[test]
fn selftest_filter_runs_one_check() {
    let out = run(&["selftest", "--only", "affine-factors"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS affine-factors"));
    assert!(text.contains("1 checks passed"));
}

#[test]
fn strata_of_the_plane() {
    let fan = fixture("projective_plane.json");
    let doc = run_json(&["strata", fan.to_str().unwrap()]);
    assert_eq!(doc["count"], 5);
    assert_eq!(doc["strata"][0]["full"], true);
}

//! End-to-end checks of the command-line interface: exit codes, JSON
//! round trips and byte-deterministic output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_troptac"))
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("troptac-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

const LINE: &str = r#"{"support": [
    {"i": 0, "j": 0, "val": "3"},
    {"i": 1, "j": 0, "val": "1"},
    {"i": 0, "j": 1, "val": "1/2"}
]}"#;

#[test]
fn analyze_tropical_line() {
    let input = write_temp("line.json", LINE);
    let out = run(&["analyze", "--input", input.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["lattice_point_count"], 3);
    assert_eq!(v["duality_passed"], true);
    assert_eq!(v["curve"]["rays"].as_array().unwrap().len(), 3);
}

#[test]
fn analyze_single_cell_feature() {
    // the full lattice of the first feature triangle, flat lift
    let input = write_temp(
        "feature1.json",
        r#"{"support": [
            {"i": 0, "j": 7, "val": "0"},
            {"i": 1, "j": 0, "val": "0"},
            {"i": 2, "j": 0, "val": "0"},
            {"i": 1, "j": 1, "val": "0"},
            {"i": 1, "j": 2, "val": "0"},
            {"i": 1, "j": 3, "val": "0"}
        ]}"#,
    );
    let out = run(&["analyze", "--input", input.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "TropicalOneTacnodal(I)");
    assert_eq!(v["feature"]["kind"], "I");
    assert_eq!(v["case"], "A");
}

#[test]
fn malformed_valuation_exits_2() {
    let input = write_temp(
        "bad.json",
        r#"{"support": [
            {"i": 0, "j": 0, "val": "1/0"},
            {"i": 1, "j": 0, "val": "0"},
            {"i": 0, "j": 1, "val": "0"}
        ]}"#,
    );
    let out = run(&["analyze", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("support[0].val"), "{err}");
}

#[test]
fn verify_single_case_and_all() {
    let out = run(&["verify", "--case", "VII"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("pass"));
    assert!(text.contains("-1/2"));

    let out = run(&["verify", "--case", "E_NEG", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["verdict"], "Pass");

    let out = run(&["verify", "--case", "all"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("summary: all pass"));
    assert!(text.contains("EDGE_LEN1"));

    let out = run(&["verify", "--case", "NOT_A_CASE"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_classes() {
    let out = run(&[
        "enumerate",
        "--gons",
        "3",
        "--interior",
        "3",
        "--lengths",
        "1,1,1",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);

    // out-of-range inputs are input errors
    let out = run(&[
        "enumerate",
        "--gons",
        "9",
        "--interior",
        "0",
        "--lengths",
        "1,1,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn render_is_byte_deterministic() {
    let input = write_temp("line2.json", LINE);
    let a = run(&["render", "--input", input.to_str().unwrap()]);
    let b = run(&["render", "--input", input.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "identical input must give identical SVG");
    let svg = String::from_utf8(a.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("subdivision"));
    // all coordinates are integers; the only dot is the xmlns URL
    let body = svg.lines().skip(1).collect::<String>();
    assert!(!body.contains('.'), "no floating point in the SVG output");
}

#[test]
fn render_subdivision_marks_interior_points() {
    // the first feature triangle has three interior lattice points
    let input = write_temp(
        "feature1b.json",
        r#"{"support": [
            {"i": 0, "j": 7, "val": "0"},
            {"i": 1, "j": 0, "val": "0"},
            {"i": 2, "j": 0, "val": "0"},
            {"i": 1, "j": 1, "val": "0"},
            {"i": 1, "j": 2, "val": "0"},
            {"i": 1, "j": 3, "val": "0"}
        ]}"#,
    );
    let out = run(&["render", "--input", input.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    let stars = svg.matches("fill=\"red\"").count();
    assert_eq!(stars, 3, "three interior lattice points drawn as stars");
}

#[test]
fn analyze_output_reparses() {
    let input = write_temp("square.json", r#"{"support": [
        {"i": 0, "j": 0, "val": "0"},
        {"i": 1, "j": 0, "val": "0"},
        {"i": 0, "j": 1, "val": "0"},
        {"i": 1, "j": 1, "val": "1"}
    ]}"#);
    let out = run(&["analyze", "--input", input.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // the emitted subdivision lift values are exact rational strings
    for lp in v["subdivision"]["lift"].as_array().unwrap() {
        let s = lp["val"].as_str().unwrap();
        assert!(s.parse::<i64>().is_ok() || s.contains('/'));
    }
    assert_eq!(v["subdivision"]["cells"].as_array().unwrap().len(), 2);
}

#[test]
fn analyze_svg_and_transcript_json() {
    let input = write_temp("line3.json", LINE);
    let out = run(&[
        "analyze",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "svg",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("<svg"));

    let out = run(&["verify", "--case", "R_III", "--format", "json", "--transcript"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let steps = v[0]["transcript"]["steps"].as_array().unwrap();
    assert!(steps.len() >= 4, "transcript carries the step-by-step systems");
    assert_eq!(v[0]["transcript"]["final_relation"], "y^4 - 1");
}

//! End-to-end tests against the built binary: wire formats, exit codes,
//! determinism, and the documented flag surface.

use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hilbcup"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn betti_matches_spec_example() {
    let v = stdout_json(&["betti", "--n", "4"]);
    assert_eq!(v, serde_json::json!([1, 1, 2, 1]));
}

#[test]
fn cup_of_transposition_sums() {
    let f = r#"{"n":3,"coeffs":[{"partition":[2,1],"value":"1"}]}"#;
    let v = stdout_json(&["cup", "--n", "3", "--f", f, "--g", f]);
    assert_eq!(
        v,
        serde_json::json!({"n":3,"coeffs":[{"partition":[3],"value":"3"}]})
    );

    let conv = stdout_json(&["conv", "--f", f, "--g", f]);
    assert_eq!(
        conv,
        serde_json::json!({"n":3,"coeffs":[
            {"partition":[3],"value":"3"},
            {"partition":[1,1,1],"value":"3"}
        ]})
    );
}

#[test]
fn cup_engines_agree_via_flag() {
    let f = r#"{"n":4,"coeffs":[{"partition":[2,1,1],"value":"1"}]}"#;
    let brute = stdout_json(&["conv", "--f", f, "--g", f, "--engine", "bruteforce"]);
    let character = stdout_json(&["conv", "--f", f, "--g", f, "--engine", "character"]);
    assert_eq!(brute, character);
}

#[test]
fn chartable_column_of_identity() {
    let v = stdout_json(&["chartable", "--n", "3"]);
    assert_eq!(v["classes"], serde_json::json!([[3], [2, 1], [1, 1, 1]]));
    // dimensions: last column
    let values = v["values"].as_array().unwrap();
    let dims: Vec<&str> = values.iter().map(|row| row[2].as_str().unwrap()).collect();
    assert_eq!(dims, vec!["1", "2", "1"]);
}

#[test]
fn phi_of_unit() {
    let f = r#"{"n":2,"coeffs":[{"partition":[1,1],"value":"1"}]}"#;
    let v = stdout_json(&["phi", "--f", f]);
    assert_eq!(v, serde_json::json!([{"powers": [[1, 2]], "coeff": "1/2"}]));
}

#[test]
fn presentation_structure() {
    let v = stdout_json(&["presentation", "--n", "3", "--max-degree", "2"]);
    assert_eq!(v["generators"], serde_json::json!(["c1", "c2"]));
    assert_eq!(v["betti"], serde_json::json!([1, 1, 1]));
    let relations = v["relations"].as_array().unwrap();
    assert_eq!(relations.len(), 1);
    assert_eq!(relations[0]["lambda"], serde_json::json!([1, 1]));
    assert_eq!(
        relations[0]["poly"],
        serde_json::json!([
            {"exponents": [[2, 1]], "coeff": "3"},
            {"exponents": [[1, 2]], "coeff": "-1"}
        ])
    );
}

#[test]
fn det_check_passes() {
    let v = stdout_json(&["det-check", "--max-d", "3"]);
    assert_eq!(v["pass"], serde_json::json!(true));
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert_eq!(v["rows"][2]["det_a"], serde_json::json!("1/2"));
    assert_eq!(v["rows"][2]["det_b"], serde_json::json!("1/2"));
    assert_eq!(v["rows"][2]["ratio"], serde_json::json!("1"));
}

#[test]
fn verify_single_suite_and_all() {
    let v = stdout_json(&["verify", "engines", "--max-n", "4"]);
    assert_eq!(v["suite"], serde_json::json!("engines"));
    assert_eq!(v["pass"], serde_json::json!(true));
    assert_eq!(v["failures"], serde_json::json!(0));

    let all = stdout_json(&["verify", "all", "--max-n", "3", "--max-d", "1"]);
    assert_eq!(all["pass"], serde_json::json!(true));
    assert_eq!(all["suites"].as_array().unwrap().len(), 13);
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = run(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown verification suite"));
}

#[test]
fn missing_required_flag_is_usage_error() {
    let out = run(&["betti"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn weight_mismatch_is_usage_error() {
    let f = r#"{"n":3,"coeffs":[{"partition":[2,1],"value":"1"}]}"#;
    let g = r#"{"n":4,"coeffs":[{"partition":[2,1,1],"value":"1"}]}"#;
    let out = run(&["cup", "--f", f, "--g", g]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["cup", "--n", "4", "--f", f, "--g", f]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_json_is_usage_error() {
    let out = run(&["phi", "--f", "{not json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("class function JSON"));
}

#[test]
fn chartable_bound_respects_env() {
    let out = bin()
        .args(["chartable", "--n", "5"])
        .env("HILBCUP_MAX_N", "4")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the configured limit"));
}

#[test]
fn output_is_deterministic() {
    let args = ["presentation", "--n", "4", "--max-degree", "3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("betti.json");
    let out = run(&["betti", "--n", "5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let contents = std::fs::read_to_string(&path).unwrap();
    assert_eq!(contents.trim(), "[1,1,2,2,1]");
}

#[test]
fn text_format_renders() {
    let out = run(&["betti", "--n", "4", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "betti(4) = [1, 1, 2, 1]"
    );

    let out = run(&["verify", "eps-series", "--max-n", "5", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("eps-series"));
    assert!(text.contains("overall: PASS"));
}

#[test]
fn emitted_json_reparses_to_equal_values() {
    // every subcommand's JSON parses back; spot-check a round trip through
    // the cup input format
    let f = r#"{"n":4,"coeffs":[{"partition":[2,2],"value":"2"},{"partition":[4],"value":"-1"}]}"#;
    let once = stdout_json(&["conv", "--f", f, "--g", f]);
    let echoed = once.to_string();
    let twice = stdout_json(&["conv", "--f", &echoed, "--g", &echoed]);
    // convolving the same (now squared) input twice is deterministic
    let again = stdout_json(&["conv", "--f", &echoed, "--g", &echoed]);
    assert_eq!(twice, again);
}

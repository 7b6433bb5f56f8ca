use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_richardson")).args(args).output().unwrap()
}

fn grid_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn hilbert_csv_rows() {
    let out = run(&["hilbert", "--r", "2", "--n", "5", "--l", "2", "--dmax", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "d,dimR,dimA,equal\n1,2,2,true\n2,3,3,true\n3,4,4,true\n");
}

#[test]
fn non_coprime_is_invalid_input() {
    let out = run(&["setup", "--r", "2", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd"));
}

#[test]
fn out_of_range_l_is_invalid_input() {
    let out = run(&["verify", "--r", "3", "--n", "7", "--l", "1,5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_json_schema() {
    let out = run(&["verify", "--r", "3", "--n", "7", "--l", "2,5", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["l"], serde_json::json!([2, 5]));
    let results = v["results"].as_array().unwrap();
    assert!(results.len() >= 8);
    for c in results {
        assert!(c["check"].is_string());
        assert_eq!(c["status"], "pass", "{c}");
        assert!(!c["detail"].is_null());
    }
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut written = Vec::new();
    for _ in 0..2 {
        let out = run(&["verify", "--r", "2", "--n", "7", "--l", "3", "--seed", "5", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        written.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(written[0], written[1]);
}

#[test]
fn injected_sign_fault_fails_with_counterexample() {
    let out = run(&["verify", "--r", "3", "--n", "7", "--l", "2,5", "--inject-sign-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&Value> = v["results"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["check"], "oracle_soundness");
    let cx = &failed[0]["detail"]["counterexample"];
    assert!(cx["matrix"].is_array() && cx["alpha"].is_array() && cx["value"].is_string());
}

#[test]
fn straighten_two_tableaux() {
    // z = (1,0) and (0,1) in (2,5,l=2)
    let g1 = grid_file("1 1 2 3 3\n2 4 4 5 5\n");
    let g2 = grid_file("1 1 2 2 3\n3 4 4 5 5\n");
    let out = run(&[
        "straighten",
        "--r",
        "2",
        "--n",
        "5",
        "--l",
        "2",
        g1.path().to_str().unwrap(),
        g2.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let detail = &v["results"][0]["detail"];
    assert_eq!(detail["z"]["blocks"], serde_json::json!([[1, 1]]));
    assert_eq!(detail["product"]["grid"].as_array().unwrap().len(), 2);
    assert_eq!(detail["samples_agreeing"], detail["samples"]);
}

#[test]
fn malformed_tableau_names_the_cell() {
    let g1 = grid_file("1 1 2 3 3\n2 4 x 5 5\n");
    let g2 = grid_file("1 1 3 3 3\n2 2 4 5 5\n");
    let out = run(&[
        "straighten",
        "--r",
        "2",
        "--n",
        "5",
        "--l",
        "2",
        g1.path().to_str().unwrap(),
        g2.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("cell (2, 3)"), "{err}");
}

#[test]
fn non_invariant_tableau_is_rejected() {
    let g1 = grid_file("1 2 3 4 5\n1 2 3 4 5\n");
    let g2 = grid_file("1 1 2 2 3\n3 4 4 5 5\n");
    let out = run(&[
        "straighten",
        "--r",
        "2",
        "--n",
        "5",
        "--l",
        "2",
        g1.path().to_str().unwrap(),
        g2.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn setup_and_enumerate_text() {
    let out = run(&["setup", "--r", "3", "--n", "7", "--l", "2,5", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[PASS] setup"));

    let out = run(&["enumerate", "--r", "2", "--n", "5", "--l", "2", "--dmax", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"][0]["detail"]["st_count"], 2);
    assert_eq!(v["results"][1]["detail"]["pd_count"], 3);
}

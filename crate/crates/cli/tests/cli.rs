//! End-to-end tests of the command-line binary: outputs and the exit-code
//! contract (0 success, 1 internal, 2 input/fact gap, 3 verification fail).

use std::process::{Command, Output};

fn facts_path() -> &'static str {
    concat!(env!("CARGO_MANIFEST_DIR"), "/../../facts/core.json")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moorepi"))
        .args(["--facts", facts_path()])
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn compute_prints_iso_types() {
    let o = run(&["compute", "-n", "4", "-r", "1", "-i", "8"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(2)^3");

    let o = run(&["compute", "-n", "9", "-r", "3", "-i", "15"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2 + 4 + 16");
}

#[test]
fn compute_trace_and_json() {
    let o = run(&["compute", "-n", "6", "-r", "1", "-i", "10", "--trace"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("exactness audit"));
    assert!(out.trim_end().ends_with('8'));

    let o = run(&["compute", "-n", "6", "-r", "1", "-i", "10", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("valid JSON");
    assert_eq!(v["entries"][0]["computed"], "8");
    assert_eq!(v["entries"][0]["status"], "PASS");
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn uncurated_target_exits_2() {
    let o = run(&["compute", "-n", "4", "-r", "1", "-i", "99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not curated"));
}

#[test]
fn verify_passes_on_bundled_facts() {
    let o = run(&["verify", "--r-set", "1,2"]);
    assert!(o.status.success(), "verify exits 0 when everything passes");
    let out = stdout(&o);
    assert!(out.contains("0 fail"));
    assert!(!out.contains("FAIL "));
}

#[test]
fn verify_json_round_trips() {
    let o = run(&["verify", "--r-set", "1", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("valid JSON");
    assert_eq!(v["tool"]["name"], "moorepi");
    assert_eq!(v["summary"]["fail"], 0);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), v["summary"]["total"].as_u64().unwrap() as usize);
    assert!(entries.iter().all(|e| e["status"] == "PASS"));
}

#[test]
fn facts_validate_reports_zero_findings() {
    let o = run(&["facts-validate"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 findings"));
}

#[test]
fn broken_fact_file_exits_2() {
    let dir = std::env::temp_dir().join("moorepi-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_moorepi"))
        .args(["--facts", bad.to_str().unwrap(), "verify"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ext_lists_extension_iso_types() {
    let o = run(&["ext", "--sub", "2", "--quot", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2+2, 4");
}

#[test]
fn snf_prints_decomposition() {
    let dir = std::env::temp_dir().join("moorepi-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let m = dir.join("m.txt");
    std::fs::write(&m, "2 4\n6 8\n").unwrap();
    let o = run(&["snf", m.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("check: U*S*V = A"));
    assert!(out.contains("[2, 0]"));
    assert!(out.contains("[0, 4]"));
}

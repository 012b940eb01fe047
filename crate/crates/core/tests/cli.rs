//! Exit codes and report files of the `berezin` binary.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_berezin"))
}

fn write_config(dir: &std::path::Path, text: &str) -> std::path::PathBuf {
    let path = dir.join("config.json");
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn clean_run_exits_zero_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        r#"{"suites": ["young-scalar", "ki1"], "trials": 20, "spaces": [{"model": "diagonal", "dim": 3}]}"#,
    );
    let status = bin().args(["certify", "--config"]).arg(&cfg).arg("--out").arg(dir.path()).output().unwrap().status;
    assert_eq!(status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("certify.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["suites"].as_array().unwrap().len(), 2);
    assert_eq!(v["meta"]["suitesFailed"], 0);
}

#[test]
fn violation_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    // unbalanced pairs on general instances admit counterexamples
    let cfg = write_config(
        dir.path(),
        r#"{"suites": [{"id": "lemma-schwarz", "params": {"pairs": [{"kind": "power", "alpha": 0}]}}],
            "trials": 500, "unrestrictedPairs": true, "spaces": [{"model": "diagonal", "dim": 2}]}"#,
    );
    let out = bin().args(["certify", "--config"]).arg(&cfg).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!v["suites"][0]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn config_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for text in [r#"{"suites": []}"#, r#"{"suites": ["nope"]}"#, "not json"] {
        let cfg = write_config(dir.path(), text);
        let out = bin().args(["certify", "--config"]).arg(&cfg).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{text}");
        assert!(out.stdout.is_empty());
    }
    let out = bin().args(["certify", "--config", "/no/such/file.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_output_and_tighten() {
    let dir = tempfile::tempdir().unwrap();
    let status = bin()
        .args(["tighten", "--suite", "young-scalar", "--trials", "5", "--format", "csv", "--out"])
        .arg(dir.path())
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("tighten.csv")).unwrap();
    // header plus one row per trial and space
    assert_eq!(text.lines().count(), 1 + 5 * 8);
}

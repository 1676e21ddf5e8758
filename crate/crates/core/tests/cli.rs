use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_excitation"))
        .args(args)
        .env_remove("EXC_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"))
}

fn json_checked(args: &[&str], stdin: &str, schema: &str) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full, stdin);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(schema_path(schema)).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    if let Err(e) = validator.validate(&value) {
        panic!("{args:?} does not match {schema}: {e}");
    }
    value
}

#[test]
fn dim_examples() {
    assert_eq!(stdout(&run(&["dim", "--m", "4", "--k", "2"], "")), "20\n");
    assert_eq!(stdout(&run(&["dim", "--m", "4", "--k", "4"], "")), "1\n");
}

#[test]
fn every_json_output_matches_its_schema() {
    let v = json_checked(&["gens", "--m", "4", "--k", "2"], "", "gens");
    assert_eq!(v["count"], 16);
    let v = json_checked(&["groebner", "--m", "4", "--k", "2"], "", "groebner");
    assert_eq!(v["all_reduced"], true);
    json_checked(&["stdmono", "--m", "4", "--k", "2"], "", "stdmono");
    json_checked(&["stdmono", "--m", "4", "--k", "2", "--count"], "", "stdmono");
    let v = json_checked(&["stdmono", "--m", "4", "--k", "2", "--list"], "", "stdmono-list");
    assert_eq!(v.as_array().unwrap().len(), 20);
    json_checked(&["dim", "--m", "5", "--k", "2"], "", "dim");
    json_checked(&["rsk", "[[1,0,2],[0,1,1]]"], "", "rsk");
    json_checked(
        &["rsk", "--inverse", r#"{"P":[[1,2]],"Q":[[1,1]]}"#],
        "",
        "matrix",
    );
    json_checked(&["pp", "[[0,1],[1,0]]"], "", "plane-partition");
    json_checked(
        &["pp", "--inverse", r#"{"entries":[[2,1],[1,0]],"bound":2}"#],
        "",
        "matrix",
    );
    json_checked(&["dyck", "[[0,1],[1,0]]"], "", "dyck");
    json_checked(&["dyck", "--inverse", "uuduudddud"], "", "matrix");
    json_checked(&["dyck", "--pp", "uuduudddud"], "", "plane-partition");
    json_checked(&["dyck", "--stats", "uuduudddud"], "", "dyck-stats");
    json_checked(&["count", "macmahon", "3", "3", "3"], "", "count");
    json_checked(&["enum", "pp", "2", "2", "2"], "", "enum-pp");
    json_checked(&["enum", "dyck", "5", "2", "--count"], "", "enum-dyck");
    json_checked(
        &["fock", "invariant-dim", "--m", "4", "--d", "4"],
        "",
        "fock-invariant-dim",
    );
    json_checked(&["fock", "verify", "--m", "3", "--k", "1"], "", "checks");
    let v = json_checked(&["fock", "basis", "--m", "3", "--k", "1"], "", "fock-basis");
    assert_eq!(v["count"], 6);
    let v = json_checked(&["verify-all", "--m", "4", "--k", "2"], "", "checks");
    assert_eq!(v["all_passed"], true);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--format", "json", "groebner", "--m", "5", "--k", "2"],
        vec!["stdmono", "--m", "5", "--k", "3", "--list"],
        vec!["--format", "json", "fock", "basis", "--m", "4", "--k", "2"],
    ] {
        let a = run(&args, "");
        let b = run(&args, "");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn stdin_and_file_input() {
    let word = stdout(&run(&["dyck", "--pp"], "uuduudddud\n"));
    assert_eq!(word, "[[2,2],[1,0]]\n");
    let path = std::env::temp_dir().join(format!("excitation-cli-{}.json", std::process::id()));
    std::fs::write(&path, "[[0,2],[2,0]]").unwrap();
    let out = run(&["dyck", "--in", path.to_str().unwrap()], "");
    std::fs::remove_file(&path).unwrap();
    let w = stdout(&out);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&run(&["dyck", "--inverse"], &w)), "[[0,2],[2,0]]\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["dim", "--m", "4"], "").status.code(), Some(2));
    assert_eq!(run(&["nonsense"], "").status.code(), Some(2));
    assert_eq!(run(&["dim", "--m", "2", "--k", "5"], "").status.code(), Some(2));
    assert_eq!(run(&["pp", "--inverse", "[[1,2]]"], "").status.code(), Some(2));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
    let budget = run(&["fock", "invariant-dim", "--m", "12", "--d", "12"], "");
    assert_eq!(budget.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&budget.stderr).contains("budget exceeded"));
}

#[test]
fn budget_errors_are_reported() {
    let out = Command::new(env!("CARGO_BIN_EXE_excitation"))
        .args(["enum", "dyck", "18", "5", "--count"])
        .env("EXC_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("raise EXC_BUDGET"));
    let bad = Command::new(env!("CARGO_BIN_EXE_excitation"))
        .args(["dim", "--m", "4", "--k", "2"])
        .env("EXC_BUDGET", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn progress_goes_to_stderr() {
    let out = run(&["--format", "json", "verify-all", "--m", "3", "--k", "2"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("verify-all: fock"));
    let _: Value = serde_json::from_slice(&out.stdout).unwrap();
}

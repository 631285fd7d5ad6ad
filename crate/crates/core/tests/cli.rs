use std::path::Path;
use std::process::{Command, Output};

use qhom::affine::CoefficientTable;
use qhom::formats::{complex_to_json, simplicial_to_json};
use qhom::ncomplex::{build_scalar_complex, AmplitudeHomologyReport};
use qhom::simplicial::SemiSimplicialSet;
use qhom::Order;
use serde_json::Value;
use tempfile::TempDir;

fn qhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn report(o: &Output) -> AmplitudeHomologyReport {
    serde_json::from_slice(&o.stdout).expect("homology JSON")
}

const DELTA1: &str = r#"{"cells":{"0":["v0","v1"],"1":["e"]},"faces":{"1":{"e":["v1","v0"]}}}"#;

#[test]
fn point_file_homology() {
    let dir = TempDir::new().unwrap();
    let point = write(&dir, "point.json", &simplicial_to_json(&SemiSimplicialSet::point(8)));
    let out = qhom(&["homology", "--input", &point, "--N", "3", "--max-degree", "8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let r = report(&out);
    assert_eq!(r.nonzero_reliable(), vec![(1, 0, 1), (2, 1, 1)]);
    assert!(r.entries.iter().any(|e| !e.reliable), "the top of the window is flagged");

    let table = qhom(&["homology", "--input", &point, "--N", "3", "--max-degree", "8"]);
    assert!(stdout(&table).contains('?'));
}

#[test]
fn interval_is_classical() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "delta1.json", DELTA1);
    let out = qhom(&["homology", "--input", &path, "--N", "2", "--max-degree", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).nonzero_reliable(), vec![(1, 0, 1)]);
}

#[test]
fn empty_input_is_a_parse_error() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "empty.json", "");
    let out = qhom(&["homology", "--input", &path, "--N", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "parse");
    assert!(stderr(&out).contains("line 1"));
}

#[test]
fn broken_face_identity_names_the_triple() {
    let dir = TempDir::new().unwrap();
    let text = r#"{"cells":{"0":["a","b"],"1":["x","y"],"2":["t"]},
        "faces":{"1":{"x":["b","a"],"y":["b","a"]},"2":{"t":["x","x","y"]}}}"#;
    let path = write(&dir, "bad.json", text);
    let out = qhom(&["homology", "--input", &path, "--N", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("face identity") && err.contains("`t`"), "{err}");
}

#[test]
fn missing_file_and_missing_order() {
    let out = qhom(&["homology", "--input", "/nonexistent/x.json", "--N", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "delta1.json", DELTA1);
    assert_eq!(qhom(&["homology", "--input", &path]).status.code(), Some(2));
}

#[test]
fn pair_and_complex_inputs() {
    let dir = TempDir::new().unwrap();
    let pair = r#"{"cells":{"0":["v0","v1","v2"],"1":["v0v1","v0v2","v1v2"],"2":["v0v1v2"]},
        "faces":{"1":{"v0v1":["v1","v0"],"v0v2":["v2","v0"],"v1v2":["v2","v1"]},"2":{"v0v1v2":["v1v2","v0v2","v0v1"]}},
        "subcomplex":["v0","v1","v2","v0v1","v0v2","v1v2"]}"#;
    let path = write(&dir, "pair.json", pair);
    let out = qhom(&["homology", "--input", &path, "--N", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(report(&out).nonzero_reliable(), vec![(1, 2, 1)]);

    let o = Order::new(5).unwrap();
    let path = write(&dir, "scalar.json", &complex_to_json(&build_scalar_complex(o)));
    let out = qhom(&["homology", "--input", &path, "--format", "json", "--amplitude", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(report(&out).nonzero_reliable(), vec![(1, 0, 1)]);
    let clash = qhom(&["homology", "--input", &path, "--N", "3"]);
    assert_eq!(clash.status.code(), Some(2));
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--suite", "newton", "--N", "5", "--trials", "200", "--seed", "42"][..],
        &["verify", "--suite", "homotopy", "--N", "3", "--trials", "100", "--seed", "7"][..],
    ] {
        let out = qhom(args);
        assert_eq!(out.status.code(), Some(0), "{:?}: {}", args, stdout(&out));
    }
    let out = qhom(&["verify", "--suite", "coeff-table", "--N", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("alpha_6 = 1") && text.contains("k=6:"), "{text}");
}

#[test]
fn verify_json_is_deterministic() {
    let args = ["verify", "--suite", "all", "--N", "3", "--trials", "5", "--seed", "9", "--format", "json"];
    let a = qhom(&args);
    let b = qhom(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suites"].as_array().unwrap().len(), 9);
    assert_eq!(v["passed"], true);
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = qhom(&["verify", "--suite", "bogus", "--N", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown suite"));
    assert_eq!(qhom(&["verify", "--N", "4"]).status.code(), Some(2));
    assert_eq!(qhom(&["verify"]).status.code(), Some(2));
}

#[test]
fn point_command_pattern() {
    let out = qhom(&["point", "--N", "7", "--max-degree", "14", "--format", "json"]);
    let r = report(&out);
    let expected: Vec<_> = (1..=6).map(|m| (m, m as i64 - 1, 1)).collect();
    assert_eq!(r.nonzero_reliable(), expected);
    let table = stdout(&qhom(&["point", "--N", "7", "--max-degree", "14"]));
    assert_eq!(table.matches("Z[q]").count(), 6);
}

#[test]
fn table_command() {
    let text = stdout(&qhom(&["table", "--N", "3"]));
    for line in ["alpha_0 = 0", "alpha_1 = 0", "alpha_2 = 1"] {
        assert!(text.contains(line), "{text}");
    }
    let out = qhom(&["table", "--N", "7", "--format", "json"]);
    let table: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(table["N"], 7);
    assert_eq!(table["entries"].as_array().unwrap().len(), 28);
    // entries are coefficient lists that parse back exactly
    let parsed: CoefficientTable = serde_json::from_value(table).unwrap();
    assert!(parsed.checks.all());
}

#[test]
fn help_exits_zero() {
    let out = qhom(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(Path::new(env!("CARGO_BIN_EXE_qhom")).exists());
}

//! The `ringdyn` binary: command examples, exit codes and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn ringdyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringdyn")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn analyze_reports() {
    let out = ringdyn(&["analyze", "--input", &data("z6.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["ideal_count"], 4);
    assert_eq!(v["maximal_ideals"].as_array().unwrap().len(), 2);
    assert_eq!(v["decomposition"]["idempotents"], serde_json::json!([3, 4]));

    let v = json(&ringdyn(&["analyze", "--input", &data("z8.json")]));
    assert_eq!(v["local"], true);
    assert_eq!(v["decomposition"]["strong_minimal_generator"], serde_json::json!([[0, 1, 2, 3, 4, 5, 6, 7]]));

    let out = ringdyn(&["analyze", "--input", &data("zero_ring.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["trivial"], true);
}

#[test]
fn expansivity_verdicts() {
    let out = ringdyn(&["expansivity", "--input", &data("z6.json"), "--automorphism", "identity", "--mode", "positive"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"]["status"], "Proved");
    assert_eq!(v["verdict"]["witness"], serde_json::json!([[0, 2, 4], [0, 3]]));

    let out = ringdyn(&["expansivity", "--input", &data("semilocal2.json"), "--mode", "zero"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"]["status"], "Refuted");

    let out = ringdyn(&["expansivity", "--input", &data("f2xf2.json"), "--automorphism", "swap:0,1", "--mode", "expansive"]);
    assert_eq!(out.status.code(), Some(0));

    let out = ringdyn(&["expansivity", "--input", &data("f4.json"), "--automorphism", "frobenius", "--mode", "positive"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn spectrum_export() {
    let out = ringdyn(&["spec", "--input", &data("z6.json"), "--export", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches("[label=").count(), 2);
    assert!(!dot.contains("->"));

    let v = json(&ringdyn(&["spec", "--input", &data("vee.json"), "--export", "json"]));
    assert_eq!(v["order"].as_array().unwrap().len(), 2);
    let out = ringdyn(&["spec", "--input", &data("semilocal2.json")]);
    let v = json(&out);
    assert_eq!(v["points"], serde_json::json!(["(0)", "p1", "p2"]));
    // An export reads back as a space definition.
    let path = std::env::temp_dir().join(format!("ringdyn-spec-{}.json", std::process::id()));
    std::fs::write(&path, &out.stdout).unwrap();
    let again = ringdyn(&["spec", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(again.stdout, out.stdout);
}

#[test]
fn chain_checks() {
    let out = ringdyn(&["chain", "--check", "positive", "--shift", "1", "--window", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let out = ringdyn(&["chain", "--check", "positive", "--shift", "-1", "--cover", r#"[[-1,"inf"],["inf",-1]]"#]);
    assert_eq!(out.status.code(), Some(1));
    let out = ringdyn(&["chain", "--check", "minimal", "--window", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ringdyn(&["chain", "--cover", r#"[[0,0]]"#]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let bad_alpha = ringdyn(&["expansivity", "--input", &data("z6.json"), "--automorphism", "[0,2,4,0,2,4]"]);
    assert_eq!(bad_alpha.status.code(), Some(2));
    assert_eq!(ringdyn(&["analyze", "--input", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(ringdyn(&["analyze", "--input", &data("z6.json"), "--bounds.order", "3"]).status.code(), Some(3));
    assert_eq!(ringdyn(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(ringdyn(&["frobnicate"]).status.code(), Some(2));
    let unknown = ringdyn(&[
        "expansivity",
        "--input",
        &data("semilocal2.json"),
        "--mode",
        "positive",
        "--bounds.oracle-steps",
        "1",
    ]);
    assert_eq!(unknown.status.code(), Some(4));
}

#[test]
fn certificates_check_and_reject_tampering() {
    let out = ringdyn(&["expansivity", "--input", &data("z12_mod_4.json"), "--mode", "positive"]);
    assert_eq!(out.status.code(), Some(0));
    let dir = std::env::temp_dir().join(format!("ringdyn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.json");
    std::fs::write(&good, &out.stdout).unwrap();
    let check = ringdyn(&["--check-certificate", good.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(json(&check)["valid"], true);

    let mut v = json(&out);
    v["verdict"]["witness"] = serde_json::json!([[0]]);
    let bad = dir.join("bad.json");
    std::fs::write(&bad, serde_json::to_vec(&v).unwrap()).unwrap();
    let check = ringdyn(&["--check-certificate", bad.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(1));
    assert_eq!(json(&check)["valid"], false);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_byte_identical() {
    for args in [
        vec!["analyze", "--input", &data("z12_mod_4.json")][..].to_vec(),
        vec!["expansivity", "--input", &data("f2xf2.json"), "--automorphism", "swap:0,1"],
        vec!["chain", "--window", "4"],
        vec!["verify", "semilocal", "--seed", "7"],
    ] {
        let a = ringdyn(&args);
        let b = ringdyn(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn verify_single_suite() {
    let out = ringdyn(&["verify", "chain", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("chain") && text.contains("PASS"));
}

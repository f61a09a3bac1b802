use std::process::{Command, Output};

use serde_json::Value;

fn orthomod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthomod")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = orthomod(&a);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn names(v: &Value) -> Vec<String> {
    v["invariants"].as_array().unwrap().iter().map(|m| m["name"].as_str().unwrap().to_string()).collect()
}

#[test]
fn list_b42_has_nine() {
    let (v, code) = json(&["list", "--series", "B", "--rank", "4", "--level", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["total"], 9);
    assert_eq!(v[0]["invariants"].as_array().unwrap().len(), 9);
    let asym = v[0]["invariants"].as_array().unwrap().iter().filter(|m| m["symmetric"] == false).count();
    assert_eq!(asym, 2);
}

#[test]
fn verify_identity_passes() {
    let dir = tempfile::tempdir().unwrap();
    let (v, _) = json(&["list", "--series", "D", "--rank", "5", "--level", "3"]);
    let id = v[0]["invariants"].as_array().unwrap().iter().find(|m| m["name"] == "I").unwrap().clone();
    let path = dir.path().join("identity.json");
    std::fs::write(&path, serde_json::to_string(&id).unwrap()).unwrap();
    let (rep, code) = json(&["verify", "--matrix", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(rep["physical"], true);
}

#[test]
fn verify_rejects_a_broken_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let (v, _) = json(&["list", "--series", "B", "--rank", "3", "--level", "2"]);
    let mut m = v[0]["invariants"][0].clone();
    m["entries"][0][1] = 1.into();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_string(&m).unwrap()).unwrap();
    let out = orthomod(&["verify", "--matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty(), "witnesses are printed");
}

#[test]
fn enumerate_d73_finds_the_exceptional() {
    let (v, code) = json(&["enumerate", "--series", "D", "--rank", "7", "--level", "3"]);
    assert_eq!(code, 0);
    let ns = names(&v[0]);
    assert!(ns.contains(&"E(D7,3)".to_string()));
    assert!(ns.contains(&"C1·E(D7,3)".to_string()));
    assert_eq!(v[0]["mode"], "brute-force");
    assert_eq!(v[0]["diff"]["listed_not_found"].as_array().unwrap().len(), 0);
}

#[test]
fn emitted_matrices_reverify() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("enum.json");
    let code = orthomod(&["enumerate", "--series", "B", "--rank", "4", "--level", "2", "--format", "json", "--out", out.to_str().unwrap()]).status.code();
    assert_eq!(code, Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    for (k, m) in v[0]["invariants"].as_array().unwrap().iter().enumerate() {
        let p = dir.path().join(format!("m{k}.json"));
        std::fs::write(&p, serde_json::to_string(m).unwrap()).unwrap();
        let (rep, code) = json(&["verify", "--matrix", p.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert_eq!(rep["name"], m["name"]);
    }
}

#[test]
fn text_and_json_agree() {
    let args = ["enumerate", "--series", "D", "--rank", "4", "--level", "2"];
    let (v, _) = json(&args);
    let text = String::from_utf8(orthomod(&args).stdout).unwrap();
    let mut from_text: Vec<String> = text.lines().skip(1).filter_map(|l| l.split_whitespace().next().map(str::to_string)).collect();
    let mut from_json = names(&v[0]);
    from_text.sort();
    from_json.sort();
    assert_eq!(from_text, from_json);
    assert_eq!(from_json.len(), 16);
}

#[test]
fn output_is_deterministic() {
    let args = ["list", "--series", "D", "--rank-range", "4..6", "--level", "2", "--format", "json"];
    assert_eq!(orthomod(&args).stdout, orthomod(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(orthomod(&["list", "--series", "B", "--rank", "2", "--level", "2"]).status.code(), Some(2));
    assert_eq!(orthomod(&["list", "--series", "B", "--rank", "3", "--level", "4"]).status.code(), Some(2));
    assert_eq!(orthomod(&["list", "--series", "Q", "--rank", "3", "--level", "2"]).status.code(), Some(2));
    assert_eq!(orthomod(&["list", "--series", "B", "--rank-range", "5..3", "--level", "2"]).status.code(), Some(2));
    assert_eq!(orthomod(&["verify", "--matrix", "/nonexistent.json"]).status.code(), Some(2));
    let budget = ["enumerate", "--series", "D", "--rank", "4", "--level", "2", "--budget", "5"];
    assert_eq!(orthomod(&budget).status.code(), Some(3));
    // the reference D6,2 count is not reproduced
    let count = orthomod(&["count", "--series", "D", "--rank", "6", "--level", "2"]);
    assert_eq!(count.status.code(), Some(1));
    assert_eq!(orthomod(&["count", "--series", "B", "--rank-range", "3..12", "--level", "2"]).status.code(), Some(0));
}

#[test]
fn check_theorems_reports_each_claim() {
    let (v, code) = json(&["check-theorems", "--series", "B", "--rank-range", "3..5", "--level", "2"]);
    assert_eq!(code, 0);
    let claims = v.as_array().unwrap();
    assert_eq!(claims.len(), 12);
    assert!(claims.iter().all(|c| c["result"] == "pass"));
}

#[test]
fn smatrix_export() {
    let (v, code) = json(&["smatrix", "--series", "B", "--rank", "3", "--level", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["weights"].as_array().unwrap().len(), 7);
    assert_eq!(v[0]["entries"].as_array().unwrap().len(), 7);
    let text = String::from_utf8(orthomod(&["smatrix", "--series", "B", "--rank", "3", "--level", "2"]).stdout).unwrap();
    assert!(text.starts_with("S matrix of B3,2"));
}

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn example(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/examples").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rkcodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_ex(args: &[&str]) -> (i32, String, String) {
    let resolved: Vec<String> = args
        .iter()
        .map(|a| {
            if a.ends_with(".json") && !a.starts_with('/') {
                example(a).display().to_string()
            } else {
                a.to_string()
            }
        })
        .collect();
    let refs: Vec<&str> = resolved.iter().map(String::as_str).collect();
    let out = run(&refs);
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json_of(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, stdout, stderr) = run_ex(&full);
    let value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout} {stderr}"));
    (code, value)
}

#[test]
fn analyze_reports_components() {
    let (code, out, _) = run_ex(&["analyze", "psi_example.json"]);
    assert_eq!(code, 0);
    assert!(out.contains("component 0: <(1 0 1 3)>"), "{out}");
    assert!(out.contains("component 1: <(1 1 2 3)>"), "{out}");
    assert!(out.contains("d_H = 3"));
}

#[test]
fn analyze_zero_code() {
    let (code, out, _) = run_ex(&["analyze", "zero_code.json"]);
    assert_eq!(code, 0);
    assert!(out.contains("d_H = no nonzero codeword"), "{out}");
}

#[test]
fn analyze_pair_example_is_full_space() {
    let (code, v) = json_of(&["analyze", "euclidean_example.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["size"], 256);
    assert_eq!(v["euclidean_self_dual"], false);
}

#[test]
fn macwilliams_forms() {
    let (code, out, _) = run_ex(&["macwilliams", "v_code.json"]);
    assert_eq!(code, 0);
    assert!(out.contains("transform of W_C = X + 3Y"));
    assert!(out.contains("W_dual(X, Y) = X + 3Y"));

    let (code, v) = json_of(&["macwilliams", "zero_code.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["dual"]["coeffs"], serde_json::json!([1, 30, 225]));

    for form in ["cwe", "swe"] {
        let (code, v) = json_of(&["macwilliams", "euclidean_example.json", "--form", form]);
        assert_eq!(code, 0, "{form}");
        assert_eq!(v["verdict"], true);
    }
    let (code, _, _) = run_ex(&["macwilliams", "hermitian_vvv.json", "--form", "swe", "--group", "trivial"]);
    assert_eq!(code, 0);
}

#[test]
fn dual_writes_code_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dual.json");
    let (code, _, _) = run_ex(&["dual", "hermitian_vvv.json", "--hermitian", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, v) = json_of(&["analyze", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["size"], 1024);
}

#[test]
fn table1_matches() {
    let (code, out, _) = run_ex(&["table1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("7 of 7 rows match"));
    let (_, v) = json_of(&["table1"]);
    let row = &v["rows"][6];
    assert_eq!(row["lee_distance"], 6);
    assert_eq!(row["size"], 4);
}

#[test]
fn table1_mismatch_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let fixture = dir.path().join("table.json");
    let text = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/table1.json")).unwrap();
    let mut table: Value = serde_json::from_str(&text).unwrap();
    table["rows"][2]["expected"]["lee_distance"] = 5.into();
    std::fs::write(&fixture, table.to_string()).unwrap();
    let (code, out, _) = run_ex(&["table1", "--fixture", fixture.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("NO"));
}

#[test]
fn cyclic_and_skew_checks() {
    let (code, v) = json_of(&["cyclic-check", "psi_example.json", "--phi", "phi_l2.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["check"]["verdict"], false);
    assert_eq!(v["agreement"], true);

    let (code, v) = json_of(&["skew-check", "hermitian_vvv.json", "--theta", "theta1.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["check"]["verdict"], false);
    assert_eq!(v["check"]["witness"], serde_json::json!([[0, 1], [0, 1], [0, 1]]));
    assert_eq!(v["psi_image"]["verdict"], false);

    let (code, out, _) = run_ex(&["cyclic-check", "psi_example.json", "--d", "3"]);
    assert_eq!(code, 2, "{out}");
}

#[test]
fn skew_construct_paths() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("built.json");
    let (code, text, _) = run_ex(&[
        "skew-construct",
        "--components",
        "theta_swap_components.json",
        "--theta",
        "theta1.json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{text}");
    let (code, v) = json_of(&["skew-check", out.to_str().unwrap(), "--theta", "theta1.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["check"]["verdict"], true);

    let (code, _, _) = run_ex(&["skew-construct", "--components", "phi_swap_components.json", "--theta", "swap12.json"]);
    assert_eq!(code, 0);

    let (code, text, _) = run_ex(&["skew-construct", "--components", "bad_components.json", "--theta", "theta1.json"]);
    assert_eq!(code, 1);
    assert!(text.contains("is not contained in component"), "{text}");
}

#[test]
fn gray_layouts() {
    let (_, v) = json_of(&["gray", "psi_example.json"]);
    assert_eq!(v["generators"][0]["psi"], serde_json::json!([[1, 0, 1, 3], [1, 1, 2, 3]]));
    let (_, v) = json_of(&["--layout", "interleaved", "gray", "psi_example.json"]);
    assert_eq!(v["generators"][0]["psi"], serde_json::json!([[1, 1], [0, 1], [1, 2], [3, 3]]));
    let (_, v) = json_of(&["gray", "one_plus_v.json", "--phi", "phi_l2.json"]);
    assert_eq!(v["phi_image"]["size"], 8);
    assert_eq!(v["phi_image"]["lee_distance"], 2);
}

#[test]
fn search_phi_recovers_known_maps() {
    let (code, v) = json_of(&["search-phi", "one_plus_v.json", "--l", "2", "--top", "8"]);
    assert_eq!(code, 0);
    let hit = v["results"].as_array().unwrap().iter().any(|r| {
        r["phi"]["beta"] == serde_json::json!([[2]])
            && r["phi"]["beta_prime"] == serde_json::json!([[1]])
            && r["lee_distance"] == 2
            && r["size"] == 8
    });
    assert!(hit, "{v}");

    let (_, v) = json_of(&["search-phi", "two.json", "--l", "3", "--top", "1"]);
    assert!(v["results"][0]["lee_distance"].as_u64().unwrap() >= 4);

    let (code, out, _) = run_ex(&["search-phi", "zero_code.json", "--l", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("skipped"));
}

#[test]
fn input_and_guard_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"m\": 4,\n  \"k\": 1,\n  \"n\": oops\n}\n").unwrap();
    let (code, _, err) = run_ex(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 4"), "{err}");

    let (code, _, err) = run_ex(&["analyze", "/nonexistent/code.json"]);
    assert_eq!(code, 2, "{err}");

    let (code, _, err) = run_ex(&["--guard", "10", "analyze", "euclidean_example.json"]);
    assert_eq!(code, 3);
    assert!(err.contains("guard exceeded"));
}

#[test]
fn reports_are_deterministic() {
    let a = run_ex(&["--json", "macwilliams", "euclidean_example.json", "--form", "cwe"]);
    let b = run_ex(&["--json", "macwilliams", "euclidean_example.json", "--form", "cwe"]);
    assert_eq!(a.1, b.1);
}

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_zappatic");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn catalog_file(dir: &Path, name: &str) -> PathBuf {
    let out = run(&["catalog", name]);
    assert!(out.status.success());
    let path = dir.join(format!("{}.json", name.replace(':', "_")));
    std::fs::write(&path, out.stdout).unwrap();
    path
}

fn file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Only E_3-points, one irregular component and one double curve of genus
/// one, so that the cokernel of Phi depends on the map.
const IRREGULAR: &str = r#"{
  "schema_version": 1,
  "kind": "zappatic",
  "vertices": [
    {"id": 1, "pg": 0, "q": 1, "degree": 2, "section_genus": 1},
    {"id": 2, "pg": 0, "q": 0, "degree": 1, "section_genus": 0},
    {"id": 3, "pg": 0, "q": 0, "degree": 1, "section_genus": 0}
  ],
  "edges": [
    {"i": 1, "j": 2, "curve_degree": 2, "curve_genus": 1},
    {"i": 1, "j": 3, "curve_degree": 1, "curve_genus": 0},
    {"i": 2, "j": 3, "curve_degree": 1, "curve_genus": 0}
  ],
  "closed_faces": [{"cycle": [1, 2, 3], "t": 1}]
}
"#;

#[test]
fn tetrahedron_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let t = catalog_file(dir.path(), "tetrahedron");
    let out = run(&["invariants", s(&t)]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in [
        "degree           4",
        "sectional genus  3",
        "chi(O)           2",
        "pg               1",
        "q                0",
    ] {
        assert!(text.contains(line), "{text}");
    }
    let json: serde_json::Value =
        serde_json::from_slice(&run(&["invariants", s(&t), "--json"]).stdout).unwrap();
    assert_eq!(json["pg"], 1);
    assert_eq!(json["betti"]["b2"], 1);
    assert_eq!(json["realizability_violations"], 0);
}

#[test]
fn impossible_prints_warning() {
    let dir = tempfile::tempdir().unwrap();
    let p = catalog_file(dir.path(), "impossible");
    let out = run(&["invariants", s(&p)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning: 2 pair(s)"));

    let out = run(&["check", s(&p), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["violations"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = file(
        dir.path(),
        "bad.json",
        "{\n  \"schema_version\": 1,\n  \"kind\": \"zappatic\",\n  \"extra\": true\n}\n",
    );
    let out = run(&["invariants", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));

    let malformed = file(dir.path(), "m.json", "{");
    assert_eq!(run(&["invariants", s(&malformed)]).status.code(), Some(2));
    assert_eq!(
        run(&["invariants", "/nonexistent/file.json"]).status.code(),
        Some(2)
    );

    let t = catalog_file(dir.path(), "tetrahedron");
    assert_eq!(run(&["check", s(&t)]).status.code(), Some(0));
    let irregular = file(dir.path(), "irr.json", IRREGULAR);
    assert_eq!(run(&["check", s(&irregular)]).status.code(), Some(2));

    let out = run(&["catalog", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("tetrahedron"));
}

#[test]
fn missing_phi_is_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let g = file(dir.path(), "irr.json", IRREGULAR);
    let out = run(&["invariants", s(&g)]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));

    // Phi of rank 1 kills the cokernel, rank 0 leaves one dimension
    let zero = file(dir.path(), "phi0.json", r#"{"matrix": [[0]]}"#);
    let one = file(dir.path(), "phi1.json", r#"{"rank": 1}"#);
    let j = |phi: &Path, extra: &[&str]| -> serde_json::Value {
        let mut args = vec!["invariants", s(&g), "--json", "--phi", s(phi)];
        args.extend_from_slice(extra);
        serde_json::from_slice(&run(&args).stdout).unwrap()
    };
    assert_eq!(j(&zero, &[])["pg_bound"], 1);
    assert_eq!(j(&one, &[])["pg_bound"], 0);
    assert!(j(&one, &[])["pg"].is_null());
    assert_eq!(j(&one, &["--assert-ample-condition"])["pg"], 0);

    let too_big = file(dir.path(), "phi2.json", r#"{"rank": 2}"#);
    assert_eq!(
        run(&["invariants", s(&g), "--phi", s(&too_big)])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn reduce_writes_graph_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let e5 = catalog_file(dir.path(), "en:5");
    let out_path = dir.path().join("reduced.json");
    let out = run(&["reduce", s(&e5), "--out", s(&out_path)]);
    assert!(out.status.success());
    let trace: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(trace["steps"].as_array().unwrap().len(), 1);
    let reduced = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(reduced.matches("\"cycle\"").count(), 5);

    // already only E_3: same document back, empty trace
    let t = catalog_file(dir.path(), "tetrahedron");
    let trace_path = dir.path().join("trace.json");
    let out = run(&["reduce", s(&t), "--trace", s(&trace_path)]);
    assert_eq!(out.stdout, std::fs::read(&t).unwrap());
    let trace: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(trace_path).unwrap()).unwrap();
    assert!(trace["steps"].as_array().unwrap().is_empty());

    let bad = file(dir.path(), "bad.json", "[]");
    assert_eq!(run(&["reduce", s(&bad)]).status.code(), Some(2));
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let r3 = catalog_file(dir.path(), "r3-planar");
    let dot = stdout(&run(&["export-dot", s(&r3)]));
    assert!(dot.starts_with("graph G {"));
    assert!(!dot.contains("dashed"));

    let mut raw: serde_json::Value =
        serde_json::from_slice(&run(&["catalog", "rn:4"]).stdout).unwrap();
    raw["planar"] = false.into();
    let r4 = file(dir.path(), "r4.json", &raw.to_string());
    let dot = stdout(&run(&["dot", s(&r4)]));
    assert!(dot.contains("v1 -- v4 [style=dashed]"), "{dot}");
}

#[test]
fn homology_and_section() {
    let dir = tempfile::tempdir().unwrap();
    let t = catalog_file(dir.path(), "tetrahedron");
    let json: serde_json::Value =
        serde_json::from_slice(&run(&["homology", s(&t), "--json"]).stdout).unwrap();
    assert_eq!(
        json["two_cycles"],
        serde_json::json!([["1", "-1", "1", "-1"]])
    );

    let section = run(&["section", s(&t)]);
    let curve = file(dir.path(), "section.json", &stdout(&section));
    let json: serde_json::Value =
        serde_json::from_slice(&run(&["invariants", s(&curve), "--json"]).stdout).unwrap();
    assert_eq!(json["arithmetic_genus"], 3);
    assert_eq!(json["degree"], 4);
}

#[test]
fn residues_command() {
    let dir = tempfile::tempdir().unwrap();
    let t = catalog_file(dir.path(), "tetrahedron");
    // (1, 2, 4) given as (2, 1, 4): the sign flips, so this is the cycle
    let cycle = file(
        dir.path(),
        "res.json",
        r#"{"schema_version": 1, "kind": "residues", "values": [
            {"i": 1, "j": 2, "k": 3, "t": 1, "value": "1/2"},
            {"i": 2, "j": 1, "k": 4, "t": 1, "value": "1/2"},
            {"i": 1, "j": 3, "k": 4, "t": 1, "value": "1/2"},
            {"i": 2, "j": 3, "k": 4, "t": 1, "value": "-1/2"}]}"#,
    );
    let out = run(&["residues", s(&t), s(&cycle), "--claimed-pg", "1", "--json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["is_two_cycle"], true);
    assert_eq!(json["smoothability"]["verdict"], "holds");

    let broken = file(
        dir.path(),
        "res2.json",
        r#"{"schema_version": 1, "kind": "residues", "values": [
            {"i": 1, "j": 2, "k": 3, "t": 1, "value": "1"}]}"#,
    );
    assert_eq!(run(&["residues", s(&t), s(&broken)]).status.code(), Some(2));
    let text = stdout(&run(&["residues", s(&t), s(&cycle), "--claimed-pg", "0"]));
    assert!(text.contains("smoothability  violated"), "{text}");
}

#[test]
fn reads_stdin() {
    let doc = run(&["catalog", "e3-triangle"]).stdout;
    let mut child = Command::new(BIN)
        .args(["homology", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&doc).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(stdout(&out).starts_with("betti  (1, 0, 0)"));
}

#[test]
fn catalog_lists_names() {
    let text = stdout(&run(&["catalog"]));
    assert!(text.lines().any(|l| l == "en:<n>"));
}

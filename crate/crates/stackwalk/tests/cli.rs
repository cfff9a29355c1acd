//! End-to-end tests of the command-line interface: exit codes, file
//! round trips, and report determinism.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stackwalk"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("tet.txt");
    std::fs::write(&f, "0 1 2 3\n").unwrap();
    // {4,5,6} is not even a face: precondition diagnostic, exit 1
    let out = run(&["surgery", "delete", "--sigma", "4,5,6", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not a (d-1)-face"), "diagnostic names the precondition: {err}");
    // missing file
    assert_eq!(run(&["analyze", "/no/such/file"]).status.code(), Some(1));
    // malformed facet file
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1 2 x\n").unwrap();
    assert_eq!(run(&["analyze", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn analyze_is_deterministic_and_reports_schema() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("sphere.txt");
    std::fs::write(&f, "# boundary of the 4-simplex\n").unwrap();
    let mut text = String::new();
    for facet in [
        "0 1 2 3", "0 1 2 4", "0 1 3 4", "0 2 3 4", "1 2 3 4",
    ] {
        text.push_str(facet);
        text.push('\n');
    }
    std::fs::write(&f, text).unwrap();
    let a = run(&["analyze", f.to_str().unwrap()]);
    let b = run(&["analyze", f.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "identical invocations are byte-identical");
    let report: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["fvector"], serde_json::json!([1, 5, 10, 10, 5]));
    assert_eq!(report["manifold_class"], "homology-sphere");
    assert_eq!(report["stacked"], true);
}

#[test]
fn gen_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.txt");
    let cert = dir.path().join("m.cert.json");
    let st = run(&[
        "gen", "walkup", "--dim", "4", "--handles", "1", "--facets", "14", "--seed", "7",
        "--out", out.to_str().unwrap(), "--cert", cert.to_str().unwrap(),
    ]);
    assert_eq!(st.status.code(), Some(0), "{}", String::from_utf8_lossy(&st.stderr));
    let v = run(&["verify", out.to_str().unwrap(), "--cert", cert.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("\"verified\":true"));
    // β_1 = 1 and the Bagchi quantity both visible through analyze
    let a = run(&["analyze", out.to_str().unwrap(), "--field", "2"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report["betti"]["2"][1], 1);
    assert_eq!(report["stacked"], true);
    // tampering flips verify to failure
    let mut text = std::fs::read_to_string(&out).unwrap();
    text.push_str("98 99 100 101\n");
    std::fs::write(&out, text).unwrap();
    assert_eq!(
        run(&["verify", out.to_str().unwrap(), "--cert", cert.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn homology_relative_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let disc = dir.path().join("disc.txt");
    let rim = dir.path().join("rim.txt");
    std::fs::write(&disc, "0 1 2 3\n").unwrap(); // solid tetrahedron
    std::fs::write(&rim, "0 1 2\n0 1 3\n0 2 3\n1 2 3\n").unwrap(); // its boundary
    let out = run(&[
        "homology", disc.to_str().unwrap(), "--field", "0",
        "--relative-to", rim.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["betti"], serde_json::json!([0, 0, 0, 1])); // H(D^3, S^2)

    let c = run(&["check", rim.to_str().unwrap(), "--neighborly"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&c)).unwrap();
    assert_eq!(report["result"], true);
}

#[test]
fn surgery_union_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    std::fs::write(&a, "0 1 2 3\n").unwrap();
    std::fs::write(&b, "0 1 2 3\n").unwrap();
    let joined = dir.path().join("u.txt");
    let st = run(&[
        "surgery", "union", "--sigma", "1,2,3", "--tau", "0,1,2",
        a.to_str().unwrap(), b.to_str().unwrap(),
        "--out", joined.to_str().unwrap(),
    ]);
    assert_eq!(st.status.code(), Some(0), "{}", String::from_utf8_lossy(&st.stderr));
    let text = std::fs::read_to_string(&joined).unwrap();
    assert_eq!(text.lines().count(), 2, "two tetrahedra sharing a triangle");
}

#[test]
fn threads_env_is_validated() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("t.txt");
    std::fs::write(&f, "0 1 2 3\n").unwrap();
    let ok = bin()
        .env("STACKWALK_THREADS", "4")
        .args(["check", f.to_str().unwrap(), "--neighborly"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = bin()
        .env("STACKWALK_THREADS", "lots")
        .args(["check", f.to_str().unwrap(), "--neighborly"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

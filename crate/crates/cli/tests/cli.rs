use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_matfree"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&Path]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_str(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

const SEVEN: &str = "1 2\n1 3\n1 4\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n4 6\n5 6\n5 7\n6 7\n";
const SUN3: &str = "0 1\n0 2\n1 2\n3 0\n3 1\n4 1\n4 2\n5 2\n5 0\n";
const SUN4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n4 0\n4 1\n5 1\n5 2\n6 2\n6 3\n7 3\n7 0\n";
const C4: &str = "1 2\n2 3\n3 4\n4 1\n";

fn p(s: &str) -> &Path {
    Path::new(s)
}

#[test]
fn classify_reports() {
    let d = TempDir::new().unwrap();
    let seven = write(&d, "seven.txt", SEVEN);
    let out = run(&[p("classify"), &seven]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["chordal"], true);
    assert_eq!(v["strongly_chordal"], true);
    assert_eq!(v["unit_interval"], true);

    let sun = write(&d, "sun.txt", SUN3);
    let v = json(&run(&[p("classify"), &sun]));
    assert_eq!(v["chordal"], true);
    assert_eq!(v["strongly_chordal"], false);
    assert_eq!(v["witness"]["sun"]["n"], 3);

    let c4 = write(&d, "c4.txt", C4);
    let v = json(&run(&[p("classify"), &c4]));
    assert_eq!(v["chordal"], false);
    assert_eq!(v["unit_interval"], false);
    assert_eq!(v["witness"]["chordless_cycle"].as_array().unwrap().len(), 4);
}

#[test]
fn parse_errors_exit_one() {
    let d = TempDir::new().unwrap();
    let bad = write(&d, "bad.txt", "1 2\n2 x\n");
    let out = run(&[p("classify"), &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = run_str(&["classify", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run_str(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(run_str(&["--help"]).status.success());
}

#[test]
fn label_then_verify_round_trip() {
    let d = TempDir::new().unwrap();
    let seven = write(&d, "seven.txt", SEVEN);
    let lab = d.path().join("lab.json");
    let dot = d.path().join("lab.dot");
    let out = bin()
        .args([p("label"), &seven, p("--out"), &lab, p("--dot"), &dot])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&lab).unwrap()).unwrap();
    let mut sizes = [0usize; 4];
    for e in v["edges"].as_array().unwrap() {
        sizes[e["label"].as_u64().unwrap() as usize] += 1;
    }
    assert_eq!(&sizes[1..], &[6, 5, 2]);
    assert!(std::fs::read_to_string(&dot)
        .unwrap()
        .contains("color=blue"));

    let out = run(&[p("verify"), &seven, &lab]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["ok"], true);

    let out = run(&[p("exponents"), &seven, &lab]);
    let v = json(&out);
    assert_eq!(v["exponents"], serde_json::json!([0, 1, 2, 2, 2, 3, 3]));
    assert_eq!(v["chromatic_factors_check"], true);
}

#[test]
fn trees_get_all_ones() {
    let d = TempDir::new().unwrap();
    let tree = write(&d, "tree.txt", "1 2\n1 3\n3 4\n3 5\n");
    let v = json(&run(&[p("label"), &tree]));
    assert!(v["edges"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["label"] == 1));
}

#[test]
fn verify_rejections() {
    let d = TempDir::new().unwrap();
    let k3 = write(&d, "k3.txt", "1 2\n2 3\n1 3\n");
    let ones = write(&d, "ones.txt", "1 2 1\n2 3 1\n1 3 1\n");
    let out = run(&[p("verify"), &k3, &ones]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["ok"], false);
    assert_eq!(v["violation"]["kind"], "ForestCycle");

    // bump one label of a good labeling
    let seven = write(&d, "seven.txt", SEVEN);
    let good = json(&run(&[p("label"), &seven]));
    let mut bumped = good.clone();
    let l = bumped["edges"][0]["label"].as_u64().unwrap();
    bumped["edges"][0]["label"] = (l + 1).into();
    let bumped = write(&d, "bumped.json", &bumped.to_string());
    let out = run(&[p("verify"), &seven, &bumped]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["ok"], false);

    // labeling for a different edge set
    let out = run(&[p("verify"), &seven, &ones]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn suns_are_rejected_with_witness() {
    let d = TempDir::new().unwrap();
    for (name, text, n) in [("s3.txt", SUN3, 3), ("s4.txt", SUN4, 4)] {
        let f = write(&d, name, text);
        let out = run(&[p("label"), &f]);
        assert_eq!(out.status.code(), Some(2));
        let v = json(&out);
        assert_eq!(v["witness"]["sun"]["n"], n);
        assert!(v["witness"]["crown"]["k"].as_u64().unwrap() >= 3);
    }
}

#[test]
fn exponents_of_complete_and_cycle() {
    let d = TempDir::new().unwrap();
    let k5 = write(
        &d,
        "k5.json",
        r#"{"edges": [[1,2],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5],[3,4],[3,5],[4,5]]}"#,
    );
    let v = json(&run(&[p("exponents"), &k5]));
    assert_eq!(v["exponents"], serde_json::json!([0, 1, 2, 3, 4]));
    assert_eq!(v["chromatic_factors_check"], true);

    let c4 = write(&d, "c4.txt", C4);
    let out = run(&[p("exponents"), &c4]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"]
        .as_str()
        .unwrap()
        .contains("not chordal"));
}

#[test]
fn poset_outputs() {
    let d = TempDir::new().unwrap();
    let k4 = write(&d, "k4.txt", "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let v = json(&run(&[p("poset"), &k4]));
    assert_eq!(v["nodes"].as_array().unwrap().len(), 1);
    assert_eq!(v["crown"], Value::Null);

    let seven = write(&d, "seven.txt", SEVEN);
    let v = json(&run(&[p("poset"), &seven]));
    assert_eq!(v["nodes"].as_array().unwrap().len(), 10);
    assert_eq!(v["covers"].as_array().unwrap().len(), 12);

    let sun = write(&d, "sun.txt", SUN3);
    let v = json(&run(&[p("poset"), &sun]));
    assert_eq!(v["nodes"].as_array().unwrap().len(), 11);
    assert_eq!(v["crown"]["k"], 3);

    let out = run(&[p("poset"), &seven, p("--dot")]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("digraph"));

    let c4 = write(&d, "c4.txt", C4);
    assert_eq!(run(&[p("poset"), &c4]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let d = TempDir::new().unwrap();
    let seven = write(&d, "seven.txt", SEVEN);
    for cmd in ["classify", "label", "poset", "exponents"] {
        let a = run(&[p(cmd), &seven]);
        let b = run(&[p(cmd), &seven]);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
    let trace = bin()
        .args([p("label"), &seven, p("--emit"), p("trace")])
        .output()
        .unwrap();
    let v = json(&trace);
    assert_eq!(v["trace"]["steps"].as_array().unwrap().len(), 3);
}

#[test]
fn format_override_and_stdin() {
    let d = TempDir::new().unwrap();
    // JSON content under a .txt name needs the override
    let f = write(&d, "g.txt", r#"{"edges": [[1,2],[2,3]]}"#);
    assert_eq!(run(&[p("classify"), &f]).status.code(), Some(1));
    let out = run(&[p("--format"), p("json"), p("classify"), &f]);
    assert!(out.status.success());

    use std::io::Write;
    let mut child = bin()
        .args(["classify", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(C4.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(json(&out)["chordal"], false);
}

#[test]
fn selftest_runs_clean() {
    let out = run_str(&[
        "selftest",
        "--count",
        "40",
        "--seed",
        "3",
        "--max-vertices",
        "7",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let v = json(&out);
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert_eq!(v["graphs"], 40);
}

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hodeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodeg")).args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const PENCIL_3: &str = "# three concurrent lines\nline: 0 1 0\nline: -1 1 0\nline: 1 1 0\n";
const NEAR_PENCIL_4: &str = "line: 0 1 0\nline: 0 1 1\nline: 0 1 2\nline: 1 0 0\n";

#[test]
fn pencil_file_report() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pencil.txt", PENCIL_3);
    let v = json(&hodeg(&["analyze", &f]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["classification"]["kind"], "Pencil");
    assert_eq!(v["invariants"]["delta"], "t1*t2*t3 - 1");
    assert_eq!(v["invariants"]["delta0"], 3);
    assert_eq!(v["invariants"]["route_agreement"], true);
    assert_eq!(v["bounds"]["best"], 3);
}

#[test]
fn pencil_family_uses_family_presentation() {
    let v = json(&hodeg(&["analyze", "--family", "pencil", "--m", "3"]));
    assert_eq!(v["input"]["presentation"], "family");
    assert_eq!(v["invariants"]["delta0"], 3);
}

#[test]
fn parallel_lines_are_infinite() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "par.txt", "line: 0 1 0\nline: 0 1 1\n");
    let v = json(&hodeg(&["analyze", &f]));
    assert_eq!(v["classification"]["kind"], "AllParallel");
    assert_eq!(v["invariants"]["delta0"], "infinite");
    assert_eq!(v["invariants"]["delta"], "0");
    assert!(v["bounds"].is_null());
}

#[test]
fn near_pencil_meets_its_bound() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "np.txt", NEAR_PENCIL_4);
    let v = json(&hodeg(&["analyze", &f]));
    assert_eq!(v["classification"]["kind"], "NearPencil");
    assert_eq!(v["invariants"]["delta0"], 2);
    assert_eq!(v["bounds"]["best"], 2);
}

#[test]
fn presentations_from_files() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("hopf", "gens: a b\nrel: a b a^-1 b^-1\n", Value::from("1"), Value::from(0)),
        ("trefoil", "gens: x y\nrel: x y x y^-1 x^-1 y^-1\n", Value::from("t1^2 - t1 + 1"), Value::from(2)),
        ("free-one", "gens: x\n", Value::from("1"), Value::from(0)),
        ("free-two", "gens: x y\n", Value::from("0"), Value::from("infinite")),
    ];
    for (name, body, delta, delta0) in cases {
        let f = write(&dir, name, body);
        let v = json(&hodeg(&["invariants", &f]));
        assert_eq!(v["input"]["kind"], "presentation", "{name}");
        assert_eq!(v["invariants"]["delta"], delta, "{name}");
        assert_eq!(v["invariants"]["delta0"], delta0, "{name}");
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "line: 1 2\n");
    assert_eq!(hodeg(&["analyze", &bad]).status.code(), Some(2));
    let bad_dsl = write(&dir, "bad.pres", "gens: x\nrel: x^\n");
    assert_eq!(hodeg(&["invariants", &bad_dsl]).status.code(), Some(2));
    assert_eq!(hodeg(&["analyze", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(hodeg(&["analyze", "--family", "tetrahedral", "--m", "4"]).status.code(), Some(2));
    let dup = write(&dir, "dup.txt", "line: 1 1 0\nline: 2 2 0\n");
    assert_eq!(hodeg(&["analyze", &dup]).status.code(), Some(3));
    let curve = write(&dir, "curve.txt", "curve: m=3 r=5 tangents=0\n");
    assert_eq!(hodeg(&["bounds", &curve]).status.code(), Some(3));
}

#[test]
fn malformed_inputs_never_panic() {
    let dir = TempDir::new().unwrap();
    let bodies = ["", "line:", "line: a b c", "line: 0 0 1", "curve: m=x", "line: 1/0 1 1", "\u{0}\u{1}", "curve: m=2 r=1 tangents=0\nline: 1 0 0"];
    for (i, body) in bodies.iter().enumerate() {
        let f = write(&dir, &format!("m{i}.txt"), body);
        for cmd in ["analyze", "bounds", "invariants", "presentation"] {
            let out = hodeg(&[cmd, &f]);
            let code = out.status.code().expect("exited normally");
            assert!(matches!(code, 0 | 2 | 3), "{cmd} {body:?}: exit {code}");
            assert!(!String::from_utf8_lossy(&out.stderr).contains("panicked"), "{cmd} {body:?}");
        }
    }
}

#[test]
fn json_round_trips_and_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "np.txt", NEAR_PENCIL_4);
    let a = hodeg(&["analyze", &f]);
    let b = hodeg(&["analyze", &f]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pencil.txt", PENCIL_3);
    let out = dir.path().join("report.json");
    let run = hodeg(&["analyze", &f, "--out", out.to_str().unwrap()]);
    assert!(run.status.success());
    assert!(run.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["invariants"]["delta0"], 3);
}

#[test]
fn curve_bounds_report() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "curve.txt", "curve: m=5 r=3 tangents=2\n");
    let v = json(&hodeg(&["bounds", &f]));
    assert_eq!(v["input"]["kind"], "curve");
    assert!(v["invariants"].is_null());
    assert!(v["bounds"]["curve"].is_object());
}

#[test]
fn presentation_round_trips_through_invariants() {
    let dir = TempDir::new().unwrap();
    let out = hodeg(&["presentation", "--family", "near-pencil", "--m", "4"]);
    assert!(out.status.success());
    let f = write(&dir, "np.pres", std::str::from_utf8(&out.stdout).unwrap());
    let v = json(&hodeg(&["invariants", &f]));
    assert_eq!(v["invariants"]["delta0"], 2);
}

#[test]
fn selftest_filter() {
    let out = hodeg(&["selftest", "--filter", "pencil"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("PASS pencil-3")));
    assert!(text.lines().filter(|l| l.starts_with("PASS ")).all(|l| l.contains("pencil")));
    assert!(text.contains("0 failed"));
}

fn corpus(dir: &Path, body: &str) -> String {
    let p = dir.join("corpus.toml");
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn corrupted_corpus_names_the_failure() {
    let dir = TempDir::new().unwrap();
    let good = corpus(
        dir.path(),
        r#"
[[case]]
name = "pencil-4"
group = "families"
source = "family"
family = "pencil"
m = 4
[case.expect]
delta0 = 8
"#,
    );
    assert_eq!(hodeg(&["selftest", "--corpus", &good]).status.code(), Some(0));

    let bad = corpus(
        dir.path(),
        r#"
[[case]]
name = "pencil-4"
group = "families"
source = "family"
family = "pencil"
m = 4
[case.expect]
delta0 = 8

[[case]]
name = "trefoil-wrong"
group = "presentations"
source = "presentation"
text = "gens: x y\nrel: x y x y^-1 x^-1 y^-1\n"
[case.expect]
delta0 = 3
"#,
    );
    let out = hodeg(&["selftest", "--corpus", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL trefoil-wrong"), "{text}");
    assert!(text.contains("PASS pencil-4"));

    let json_out = hodeg(&["selftest", "--corpus", &bad, "--json"]);
    let v: Value = serde_json::from_slice(&json_out.stdout).unwrap();
    assert!(v["results"].as_array().unwrap().iter().any(|r| r["name"] == "trefoil-wrong" && r["passed"] == false));
}

#[test]
fn malformed_corpus_is_a_parse_error() {
    let dir = TempDir::new().unwrap();
    let bad = corpus(dir.path(), "[[case]]\nname = 3\n");
    assert_eq!(hodeg(&["selftest", "--corpus", &bad]).status.code(), Some(2));
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recon-minors")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn put(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const P3: &str = "3 2\n0 1\n1 2\n";
const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";

/// Reads the `key value` lines printed by `reconstats`.
fn stat(out: &str, key: &str) -> String {
    out.lines()
        .find_map(|l| l.strip_prefix(key).map(|v| v.trim().to_string()))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn validate_exit_codes() {
    let d = TempDir::new().unwrap();
    let p3 = put(&d, "p3.txt", P3);
    let good = put(&d, "good.txt", "[0, 1, 1]");
    let split = put(&d, "split.txt", "0 1 0");
    let short = put(&d, "short.txt", "0 1");

    let o = run(&["validate", "-g", "k3", "-H", "k2", "-m", s(&good)]);
    assert_eq!(code(&o), 0);
    let o = run(&["validate", "-g", s(&p3), "-H", "k2", "-m", s(&split)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("branch set 0 disconnected"));
    assert_eq!(code(&run(&["validate", "-g", "k3", "-H", "k2", "-m", s(&short)])), 2);
    let junk = put(&d, "junk.txt", "3 2\n0 1\n");
    assert_eq!(code(&run(&["validate", "-g", s(&junk), "-H", "k2", "-m", s(&good)])), 2);
    let big = put(&d, "big.txt", "[0, 1, 5]");
    assert_eq!(code(&run(&["validate", "-g", "k3", "-H", "k2", "-m", s(&big)])), 2);
}

#[test]
fn model_file_names_its_instance() {
    let d = TempDir::new().unwrap();
    put(&d, "c4.txt", C4);
    let m = put(&d, "m.json", r#"{"host": "c4.txt", "target": "k2", "labels": [0, 0, 1, 1]}"#);
    assert_eq!(code(&run(&["validate", "-m", s(&m)])), 0);
    let bare = put(&d, "bare.txt", "0 0 1 1");
    assert_eq!(code(&run(&["validate", "-m", s(&bare)])), 2);
}

#[test]
fn reconstats_small_hosts() {
    let d = TempDir::new().unwrap();
    let p3 = put(&d, "p3.txt", P3);
    let star = put(&d, "star.txt", "4 3\n0 1\n0 2\n0 3\n");
    for (g, expect) in [
        (s(&p3), ["4", "2", "2", "Infinite", "0"]),
        (s(&star), ["6", "0", "6", "Infinite", "6"]),
        ("k3", ["6", "6", "1", "3", "0"]),
    ] {
        let o = run(&["reconstats", "-g", g, "-H", "k2"]);
        assert_eq!(code(&o), 0);
        let out = stdout(&o);
        let got: Vec<String> = ["nodes", "edges", "components", "diameter", "frozen"].iter().map(|k| stat(&out, k)).collect();
        assert_eq!(got, expect, "{g}");
    }
}

#[test]
fn reconstats_writes_dot_and_json() {
    let d = TempDir::new().unwrap();
    let dot = d.path().join("r.dot");
    let json = d.path().join("r.json");
    let o = run(&["reconstats", "-g", "k3", "-H", "k2", "--dot", s(&dot), "--json", s(&json)]);
    assert_eq!(code(&o), 0);
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot.trim_start().starts_with("graph"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(v["nodes"], 6);
    assert_eq!(v["edges"], 6);
}

#[test]
fn reconstats_budget_exit() {
    let o = run(&["reconstats", "-g", "wheel:6", "-H", "k3", "--budget", "10"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn hostcheck_members_and_non_members() {
    let o = run(&["hostcheck", "-g", "wheel:5", "-H", "k3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("member"));

    let o = run(&["hostcheck", "-g", "path:3", "-H", "k2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("sizes 2,2"));

    assert_eq!(code(&run(&["hostcheck", "-g", "cycle:5", "-H", "k4"])), 4);
}

#[test]
fn plan_then_replay() {
    let d = TempDir::new().unwrap();
    let a = put(&d, "a.txt", "0 1 2 3 3");
    let b = put(&d, "b.txt", "3 1 2 0 3");
    let seq = d.path().join("seq.txt");
    for strategy in ["auto", "clique", "bfs"] {
        let o = run(&["plan", "-g", "k5", "-H", "k4", "--from", s(&a), "--to", s(&b), "--strategy", strategy, "-o", s(&seq)]);
        assert_eq!(code(&o), 0, "{strategy}");
        let o = run(&["replay", "-g", "k5", "-H", "k4", "-m", s(&a), "--seq", s(&seq)]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o).trim(), "[3, 1, 2, 0, 3]");
    }
}

#[test]
fn plan_on_a_cycle_with_k2() {
    let d = TempDir::new().unwrap();
    let c4 = put(&d, "c4.txt", C4);
    let a = put(&d, "a.txt", "0 1 1 1");
    let b = put(&d, "b.txt", "1 0 0 0");
    let o = run(&["plan", "-g", s(&c4), "-H", "k2", "--from", s(&a), "--to", s(&b), "--strategy", "k2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("4 4"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn plan_exit_codes() {
    let d = TempDir::new().unwrap();
    let p3 = put(&d, "p3.txt", P3);
    let a = put(&d, "a.txt", "0 0 1");
    let b = put(&d, "b.txt", "1 0 0");
    let args = |strategy: &'static str| ["plan", "-g", s(&p3), "-H", "k2", "--from", s(&a), "--to", s(&b), "--strategy", strategy].map(String::from);
    let o = Command::new(env!("CARGO_BIN_EXE_recon-minors")).args(args("auto")).output().unwrap();
    assert_eq!(code(&o), 5);
    let o = Command::new(env!("CARGO_BIN_EXE_recon-minors")).args(args("k2")).output().unwrap();
    assert_eq!(code(&o), 6);
    let o = Command::new(env!("CARGO_BIN_EXE_recon-minors")).args(args("clique")).output().unwrap();
    assert_eq!(code(&o), 6);
    let bad = put(&d, "bad.txt", "0 1 0");
    let o = run(&["plan", "-g", s(&p3), "-H", "k2", "--from", s(&bad), "--to", s(&b)]);
    assert_eq!(code(&o), 1);
}

#[test]
fn replay_rejects_illegal_steps() {
    let d = TempDir::new().unwrap();
    let p3 = put(&d, "p3.txt", P3);
    let a = put(&d, "a.txt", "0 0 1");
    let seq = put(&d, "seq.txt", "3 1\n1 1\n");
    let o = run(&["replay", "-g", s(&p3), "-H", "k2", "-m", s(&a), "--seq", s(&seq)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "[0, 1, 1]");
    let seq = put(&d, "bad.txt", "3 1\n0 1\n");
    let o = run(&["replay", "-g", s(&p3), "-H", "k2", "-m", s(&a), "--seq", s(&seq)]);
    assert_eq!(code(&o), 1);
    let seq = put(&d, "short.txt", "3 2\n0 1\n");
    assert_eq!(code(&run(&["replay", "-g", s(&p3), "-H", "k2", "-m", s(&a), "--seq", s(&seq)])), 2);
}

#[test]
fn gen_round_trips_through_files() {
    let d = TempDir::new().unwrap();
    let o = run(&["gen", "wheel:4"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("5 8\n"));
    let w = put(&d, "w.txt", &text);
    let o = run(&["gen", "wheel:4", "--graph6"]);
    let g6 = put(&d, "w.g6", &stdout(&o));
    let m = put(&d, "m.txt", "0 0 0 1 2");
    for g in [&w, &g6] {
        assert_eq!(code(&run(&["validate", "-g", s(g), "-H", "k3", "-m", s(&m)])), 0);
    }
    assert_eq!(code(&run(&["gen", "nonsense:3"])), 2);
}

#[test]
fn campaign_reports() {
    let d = TempDir::new().unwrap();
    let json = d.path().join("r.json");
    let o = run(&["campaign", "k2-characterization", "--n-max", "4", "--seed", "7", "--json", s(&json)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("seed=7"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(v["campaign"], "k2-characterization");
    assert_eq!(code(&run(&["campaign", "no-such-campaign"])), 2);
    assert!(stdout(&run(&["campaign", "list"])).contains("planner-fuzz"));
}

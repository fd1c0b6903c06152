use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twofactor"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn c5_fails_strict_condition() {
    let dir = TempDir::new().unwrap();
    let c5 = write(dir.path(), "c5.g6", "Dhc\n");
    let o = run(&["check", "--condition", "strict", "--in", c5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let doc = json(&o);
    assert_eq!(doc["verdict"], "violating-set");
    assert_eq!(doc["payload"]["set"].as_array().unwrap().len(), 2);
    assert_eq!(doc["payload"]["min_degree"], 2);

    let o = run(&["check", "--condition", "weak", "--in", c5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "none");
}

#[test]
fn k4_has_two_factor() {
    let dir = TempDir::new().unwrap();
    let k4 = write(dir.path(), "k4.g6", "C~\n");
    let o = run(&["two-factor", "--in", k4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["verdict"], "two-factor");
    assert_eq!(doc["graph"]["n"], 4);
    assert_eq!(doc["graph"]["m"], 6);
}

#[test]
fn bowtie_barrier() {
    let dir = TempDir::new().unwrap();
    let bowtie = write(dir.path(), "bowtie.el", "n 5\n0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n");
    let o = run(&["barrier", "--in", bowtie.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["verdict"], "barrier");
    assert_eq!(doc["payload"]["deficiency"], -2);

    let o = run(&["barrier", "--minimal", "--in", bowtie.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let size = doc["payload"]["s"].as_array().unwrap().len() + doc["payload"]["t"].as_array().unwrap().len();
    assert_eq!(size, 3);

    let o = run(&["two-factor", "--in", bowtie.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["verdict"], "barrier");
}

#[test]
fn barrier_on_graph_with_two_factor_is_negative() {
    let dir = TempDir::new().unwrap();
    let k4 = write(dir.path(), "k4.g6", "C~\n");
    let o = run(&["barrier", "--in", k4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["verdict"], "two-factor");
}

#[test]
fn standard_input_is_read() {
    use std::io::Write;
    let mut child = bin()
        .args(["two-factor"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Dhc\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["payload"]["cycles"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "g.g6", &stdout(&run(&["generate", "--tightness", "1"])));
    for args in [["two-factor", "--in"], ["min-cycles", "--in"], ["two-cycles", "--in"]] {
        let a = run(&[args[0], args[1], g.to_str().unwrap()]);
        let b = run(&[args[0], args[1], g.to_str().unwrap()]);
        assert_eq!(a.stdout, b.stdout, "{}", args[0]);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["check", "--condition", "loose"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.g6", "D!!\n");
    assert_eq!(run(&["two-factor", "--in", bad.to_str().unwrap()]).status.code(), Some(2));
    let missing = dir.path().join("missing.g6");
    assert_eq!(run(&["two-factor", "--in", missing.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["generate"]).status.code(), Some(2));
}

#[test]
fn bound_overrun_is_inconclusive() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "g.g6", &stdout(&run(&["generate", "--tightness", "2"])));
    let o = run(&["min-cycles", "--limit", "5", "--in", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let o = bin().args(["min-cycles", "--in", g.to_str().unwrap()]).env("TWOFACTOR_ORACLE_BOUND", "8").output().unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["min-cycles", "--in", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["payload"]["cycles"].as_array().unwrap().len(), 3);
}

#[test]
fn sharpness_example_fails_degree_sum() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "g.g6", &stdout(&run(&["generate", "--tightness", "2"])));
    let o = run(&["k-cycles", "--k", "2", "--in", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(json(&o)["payload"]["reason"].as_str().unwrap().contains("12 < 13"));
}

#[test]
fn family_generation_and_recognition() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "g.g6", &stdout(&run(&["generate", "--family", "3", "--core", "A_"])));
    let o = run(&["recognize", "--in", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["verdict"], "family-member");
    assert_eq!(doc["payload"]["ell"], 3);
    assert_eq!(run(&["two-factor", "--in", g.to_str().unwrap()]).status.code(), Some(1));
    let o = run(&["check", "--condition", "weak", "--in", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn k_cycles_certificate_carries_trace() {
    let dir = TempDir::new().unwrap();
    // K5 and K4 sharing vertex 0.
    let mut text = String::from("n 9\n");
    for a in 0..5 {
        for b in a + 1..5 {
            text.push_str(&format!("{a} {b}\n"));
        }
    }
    for a in 5..9 {
        text.push_str(&format!("0 {a}\n"));
        for b in a + 1..9 {
            text.push_str(&format!("{a} {b}\n"));
        }
    }
    let g = write(dir.path(), "g.el", &text);
    let o = run(&["k-cycles", "--k", "2", "--in", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["payload"]["cycles"].as_array().unwrap().len(), 2);
    assert!(!doc["trace"]["steps"].as_array().unwrap().is_empty());
}

#[test]
fn verify_corpus_reports() {
    let dir = TempDir::new().unwrap();
    let corpus = write(dir.path(), "c6.g6", &stdout(&run(&["generate", "--connected", "6"])));
    assert_eq!(std::fs::read_to_string(&corpus).unwrap().lines().count(), 112);
    for theorem in ["3", "4", "cor13", "8"] {
        let o = run(&["verify-corpus", "--theorem", theorem, "--jobs", "2", "--with-oracle", "--in", corpus.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{theorem}: {}", stdout(&o));
        let report = json(&o);
        assert_eq!(report["graphs"], 112);
        assert_eq!(report["violations"], 0);
        assert_eq!(report["inconclusive"], 0);
    }
    // Exceptional graphs have order 3ℓ - 1, so n = 5 contains one.
    let corpus = write(dir.path(), "c5.g6", &stdout(&run(&["generate", "--connected", "5"])));
    let o = run(&["verify-corpus", "--theorem", "4", "--all-verdicts", "--in", corpus.to_str().unwrap()]);
    let report = json(&o);
    let verdicts = report["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 21);
    assert!(verdicts.iter().any(|v| v["certificate"]["verdict"] == "family-member"));
}

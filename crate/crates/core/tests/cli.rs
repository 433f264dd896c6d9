//! Exit-code contract and end-to-end command behaviour of the binary.

mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::corpus_dir;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_sgcert")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(corpus_dir())
        .output()
        .expect("run sgcert")
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn validate_ok_and_invalid() {
    assert_eq!(code(&run(&["validate", "hopf.sgd"])), 0);

    // Disconnected two-circle file: structurally parseable, invalid map.
    let path = tmp("split.sgd");
    std::fs::write(&path, "sgd 1\nV v1 a1.0 a1.1\nV v2 a2.0 a2.1\n").unwrap();
    assert_eq!(code(&run(&["validate", path.to_str().unwrap()])), 3);
}

#[test]
fn parse_errors_exit_2() {
    let path = tmp("broken.sgd");
    std::fs::write(&path, "sgd 1\nV v1 a1.0 a1.0\n").unwrap();
    assert_eq!(code(&run(&["validate", path.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["analyze", path.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["certify", path.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["validate", "no-such-file.sgd"])), 2);
}

#[test]
fn analyze_reports_base_criterion() {
    let out = run(&["analyze", "c0.sgd"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("base criterion: true"), "{text}");
    assert!(text.contains("quick negative: none"), "{text}");

    let out = run(&["analyze", "c1.sgd"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("base criterion: false"), "{text}");
    assert!(text.contains("cut vertices: v1 v2"), "{text}");
}

#[test]
fn certify_verdict_exit_codes() {
    // Positive: exit 0.
    assert_eq!(code(&run(&["certify", "borromean.cert"])), 0);

    // Unknown: a certificate whose step cannot verify.
    let path = tmp("bad-step.cert");
    std::fs::write(
        &path,
        "cert 1\ninitial inline\nsgd 1\nV v1 a1.0 a1.1\nend\nstep cycle=s9 face=F1\n",
    )
    .unwrap();
    let out = run(&["certify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stdout).contains("Unknown"));

    // Negative: a pendant-vertex diagram.
    let path = tmp("pendant.cert");
    std::fs::write(
        &path,
        "cert 1\ninitial inline\nsgd 1\nV v1 a1.0\nV v2 a1.1 a2.0 a2.1\nend\n",
    )
    .unwrap();
    let out = run(&["certify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 5);
    assert!(String::from_utf8_lossy(&out.stdout).contains("pendant"));

    // Negative: split map.
    let path = tmp("split.cert");
    std::fs::write(
        &path,
        "cert 1\ninitial inline\nsgd 1\nV v1 a1.0 a1.1\nV v2 a2.0 a2.1\nend\n",
    )
    .unwrap();
    let out = run(&["certify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 5);
    assert!(String::from_utf8_lossy(&out.stdout).contains("split"));
}

#[test]
fn auto_certify_finds_and_emits() {
    let emit = tmp("hopf-auto.cert");
    let out = run(&[
        "auto-certify",
        "hopf.sgd",
        "--max-steps",
        "2",
        "--max-len",
        "1",
        "--emit",
        emit.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("1 step(s)"), "{text}");
    // The emitted certificate verifies on its own.
    let out = run(&["certify", emit.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}

#[test]
fn auto_certify_unknown_when_budget_fails() {
    // The two-ring chain needs one step per ring; forbid any steps.
    let out = run(&["auto-certify", "c1.sgd", "--max-steps", "0", "--max-len", "1"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn contract_pipes_canonical_diagram() {
    let out = run(&["contract", "hopf.sgd", "--disk", "cycle=s1 face=F1"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let d = sgcert::sgd::parse(&text).expect("contract output parses");
    assert!(d.validate().is_valid());
    assert_eq!(sgcert::sgd::serialize(&d), text);

    // A pendant-style disk is refused with the unknown-verdict code.
    let out = run(&["contract", "hopf.sgd", "--disk", "cycle=s1 face=F9"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn find_disks_lists_hopf_sides() {
    let out = run(&["find-disks", "hopf.sgd", "--max-len", "1"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4, "{text}");
    assert!(lines.iter().all(|l| l.starts_with("disk cycle=s")));
}

#[test]
fn render_writes_svg() {
    let out_path = tmp("borromean.svg");
    let out = run(&["render", "borromean.sgd", "-o", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let svg = std::fs::read_to_string(&out_path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<path").count(), 16);
}

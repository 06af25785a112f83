//! Every example builds and exits successfully.

use std::path::PathBuf;
use std::process::Command;

fn example(name: &str) -> PathBuf {
    // target/<profile>/deps/examples-<hash> -> target/<profile>/examples/<name>
    let exe = std::env::current_exe().unwrap();
    let dir = exe.parent().unwrap().parent().unwrap().join("examples");
    dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX))
}

fn run(name: &str, args: &[&str]) {
    let path = example(name);
    assert!(path.exists(), "{} not built", path.display());
    let o = Command::new(&path).args(args).output().unwrap();
    assert!(
        o.status.success(),
        "{name} failed:\n{}\n{}",
        String::from_utf8_lossy(&o.stdout),
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn polynomials() {
    run("polynomials", &[]);
}

#[test]
fn linear_algebra() {
    run("linear_algebra", &[]);
}

#[test]
fn vector_fields() {
    run("vector_fields", &[]);
}

#[test]
fn free_divisor() {
    run("free_divisor", &[]);
}

#[test]
fn relative_invariants() {
    run("relative_invariants", &[]);
}

#[test]
fn additive_invariants() {
    run("additive_invariants", &[]);
}

#[test]
fn theorem_checks() {
    run("theorem_checks", &[]);
}

#[test]
fn analyze_json() {
    run("analyze_json", &[]);
}

#[test]
fn corpus_run() {
    run("corpus_run", &["d1-vs-d2"]);
}

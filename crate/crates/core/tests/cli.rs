use std::path::Path;
use std::process::{Command, Output};

fn pvsinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pvsinv"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const AAC: &str = r#"{"n":3,"poly":"x*(x*z - y^2)","variables":["x","y","z"]}"#;

#[test]
fn analyze_writes_a_deterministic_report() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "aac.json", AAC);
    let out1 = dir.path().join("r1.json");
    let out2 = dir.path().join("r2.json");
    for out in [&out1, &out2] {
        let o = pvsinv(&[
            "analyze",
            &input,
            "--seed",
            "5",
            "--max-denominator-degree",
            "6",
            "--json",
            out.to_str().unwrap(),
        ]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
    let r1 = std::fs::read_to_string(&out1).unwrap();
    assert_eq!(r1, std::fs::read_to_string(&out2).unwrap());
    let v: serde_json::Value = serde_json::from_str(&r1).unwrap();
    assert_eq!(v["version"], "1.0");
    assert_eq!(v["options"]["seed"], 5);
    assert_eq!(v["additive"]["bound"], 6);
    assert_eq!(v["dims"]["r"], 2);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"n":2,"basis":[[["1/0","0"],["0","1"]]]}"#,
    );
    let o = pvsinv(&["analyze", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("basis[0][0][0]"));
    assert_eq!(
        pvsinv(&["analyze", "/nonexistent/input.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(pvsinv(&["corpus", "run", "nope"]).status.code(), Some(2));
}

#[test]
fn check_lfd_distinguishes() {
    let dir = tempfile::tempdir().unwrap();
    let yes = write(dir.path(), "aac.json", AAC);
    let no = write(
        dir.path(),
        "two.json",
        r#"{"n":3,"basis":[[["1","0","0"],["0","1","0"],["0","0","1"]],[["0","0","0"],["1","0","0"],["0","0","0"]],[["0","0","0"],["0","0","0"],["1","0","0"]]]}"#,
    );
    assert_eq!(pvsinv(&["check-lfd", &yes]).status.code(), Some(0));
    let o = pvsinv(&["check-lfd", &no]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_lfd"], false);
}

#[test]
fn derlog_output_is_an_algebra_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "aac.json", AAC);
    let o = pvsinv(&["derlog", "--poly", &input]);
    assert_eq!(o.status.code(), Some(0));
    let algebra = write(dir.path(), "g.json", &String::from_utf8(o.stdout).unwrap());
    let a = pvsinv(&["analyze", &algebra, "--json", "-"]);
    assert_eq!(a.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["algebra"]["dim"], 3);
    assert_eq!(v["basics"]["invariants"].as_array().unwrap().len(), 2);
}

#[test]
fn corpus_commands() {
    let o = pvsinv(&["corpus", "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("complicated"));
    let o = pvsinv(&["corpus", "run", "aac"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("PASS aac"));
    let o = pvsinv(&["corpus", "run", "--all"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stdout)
    );
}

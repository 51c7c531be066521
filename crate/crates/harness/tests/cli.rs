use std::path::Path;
use std::process::{Command, Output};

fn pcia(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcia"))
        .args(args)
        .current_dir(cwd)
        .output()
        .unwrap()
}

#[test]
fn list_shows_every_problem() {
    let dir = tempfile::tempdir().unwrap();
    let out = pcia(&["list"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["F1 ", "F23", "G1 ", "G13"] {
        assert!(text.contains(name), "{name} missing from\n{text}");
    }
    assert_eq!(text.lines().count(), 1 + 23 + 13);
}

#[test]
fn run_appends_report_rows() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "run",
        "--problem",
        "F16",
        "--repeats",
        "3",
        "--seed",
        "1",
        "--iters",
        "50",
        "--pop",
        "30",
        "--out",
        "report.csv",
        "--trace-dir",
        "traces",
    ];
    for _ in 0..2 {
        let out = pcia(&args, dir.path());
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(String::from_utf8(out.stdout)
            .unwrap()
            .starts_with("F16: avg "));
    }
    let report = std::fs::read_to_string(dir.path().join("report.csv")).unwrap();
    let lines: Vec<_> = report.lines().collect();
    assert_eq!(
        lines[0],
        "problem,repeats,avg,std,best,worst,mean_evals,mean_restarts"
    );
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1], lines[2]);
    assert!(lines[1].starts_with("F16,3,"));
    assert_eq!(
        std::fs::read_dir(dir.path().join("traces"))
            .unwrap()
            .count(),
        3
    );
}

#[test]
fn config_file_with_flag_overrides() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("exp.toml"),
        "problem = \"G8\"\nrepeats = 2\n[pcia]\npop_size = 30\nmax_iters = 40\n[output]\nreport = \"g.csv\"\n",
    )
    .unwrap();
    let out = pcia(&["validate", "--config", "exp.toml"], dir.path());
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = pcia(
        &[
            "run",
            "--config",
            "exp.toml",
            "--repeats",
            "1",
            "--alpha",
            "2",
        ],
        dir.path(),
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report = std::fs::read_to_string(dir.path().join("g.csv")).unwrap();
    assert!(report.lines().nth(1).unwrap().starts_with("G8,1,"));
}

#[test]
fn config_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("bad.toml"),
        "problem = \"F1\"\nrepeats = 0\n",
    )
    .unwrap();
    std::fs::write(dir.path().join("typo.toml"), "problm = \"F1\"\n").unwrap();
    std::fs::write(dir.path().join("empty.toml"), "repeats = 2\n").unwrap();
    for args in [
        vec!["validate", "--config", "bad.toml"],
        vec!["validate", "--config", "typo.toml"],
        vec!["validate", "--config", "empty.toml"],
        vec!["validate", "--config", "missing.toml"],
        vec!["run", "--problem", "F42"],
        vec!["run", "--problem", "F1", "--rotation", "nope.txt"],
        vec!["run", "--problem", "G3", "--pc", "-1"],
        vec!["run", "--problem", "F1", "--alpha", "3"],
        vec!["frobnicate"],
    ] {
        let out = pcia(&args, dir.path());
        assert_eq!(
            out.status.code(),
            Some(1),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn unwritable_output_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = pcia(
        &[
            "run",
            "--problem",
            "F1",
            "--dim",
            "2",
            "--repeats",
            "1",
            "--iters",
            "5",
            "--pop",
            "20",
            "--out",
            "no/such/dir/r.csv",
        ],
        dir.path(),
    );
    assert_eq!(
        out.status.code(),
        Some(2),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

//! Table output against the committed golden files. `UPDATE_GOLDEN=1`
//! rewrites them instead of comparing.

use std::path::PathBuf;
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    ("a.csv", &["a"]),
    ("a.csv", &["a", "--source", "formula"]),
    ("b.csv", &["b"]),
    ("b.csv", &["b", "--source", "formula"]),
    ("internal.csv", &["internal"]),
    ("m-intervals.csv", &["m-intervals"]),
    ("m-intervals.csv", &["m-intervals", "--source", "formula"]),
    (
        "m-intervals-formula-n9.csv",
        &["m-intervals", "--source", "formula", "--max-n", "9"],
    ),
    ("m-stats.csv", &["m-stats"]),
    ("refined-ell.csv", &["refined-ell"]),
    ("refined-ell.csv", &["refined-ell", "--source", "formula"]),
    ("refined-ell-by-k.csv", &["refined-ell", "--by-k"]),
    (
        "refined-ell-by-k-binomial.csv",
        &["refined-ell", "--by-k", "--binomial"],
    ),
    ("refined-pq.csv", &["refined-pq"]),
    ("refined-pq-synchronized.csv", &["refined-pq", "--synchronized"]),
    (
        "refined-pq-synchronized.csv",
        &["refined-pq", "--synchronized", "--source", "formula"],
    ),
    ("refined-pq-binomial.csv", &["refined-pq", "--binomial"]),
    ("face-dims.csv", &["face-dims"]),
];

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_tamari"))
        .arg("--quiet")
        .args(args)
        .output()
        .expect("run tamari");
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn tables_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for (file, rest) in CASES {
        let mut args = vec!["table"];
        args.extend_from_slice(rest);
        let got = run(&args);
        let path = golden_dir().join(file);
        if update && !rest.contains(&"--source") {
            std::fs::write(&path, &got).expect("write golden file");
            continue;
        }
        let want = std::fs::read_to_string(&path).expect("read golden file");
        if got != want {
            mismatches.push(format!("{args:?} differs from {file}:\n{got}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn series_coefficients_reproduce_the_first_two_tables() {
    for (name, file) in [("a", "a.csv"), ("b", "b.csv")] {
        let want = std::fs::read_to_string(golden_dir().join(file)).unwrap();
        assert_eq!(run(&["series", name, "--order", "9"]), want);
    }
}

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn negbeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negbeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_at(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn expand_writes_digits_with_config() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let o = negbeta(&[
        "expand",
        "--beta",
        "13/10",
        "--n",
        "20",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json_at(&out);
    assert_eq!(v["format_version"], "negbeta-output/1");
    assert_eq!(v["config"]["beta"], "13/10");
    let digits = v["result"]["digits"].as_str().unwrap();
    assert!(digits.starts_with("2112"), "{digits}");
    assert_eq!(digits.len(), 20);
}

#[test]
fn decimal_and_fraction_agree() {
    let a = negbeta(&["expand", "--beta", "1.3", "--n", "25", "--format", "csv"]);
    let b = negbeta(&["expand", "--beta", "13/10", "--n", "25", "--format", "csv"]);
    let body = |o: &Output| {
        String::from_utf8(o.stdout.clone())
            .unwrap()
            .lines()
            .filter(|l| !l.starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(body(&a), body(&b));
}

#[test]
fn factor_report_passes_for_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("f.json");
    let o = negbeta(&[
        "factor",
        "--beta",
        "2",
        "--depth",
        "12",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json_at(&out);
    let claims = v["result"]["report"]["claims"].as_array().unwrap();
    assert!(!claims.is_empty());
    assert!(claims.iter().all(|c| c["status"] == "Pass"), "{claims:?}");
}

#[test]
fn entropy_csv_ends_near_log_phi() {
    let o = negbeta(&[
        "entropy", "--beta", "golden", "--n", "14", "--format", "csv",
    ]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("# format_version=negbeta-output/1\n# config="));
    let last: f64 = text
        .lines()
        .last()
        .unwrap()
        .rsplit(',')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(last > 0.38 && last < 0.58, "{last}");
}

#[test]
fn graph_dot_and_b_file() {
    let dir = tempfile::tempdir().unwrap();
    let b = dir.path().join("b.txt");
    std::fs::write(&b, "# bound sequence\n|3,2,3,2,1,3,3\n").unwrap();
    let o = negbeta(&[
        "graph",
        "--b-file",
        b.to_str().unwrap(),
        "--K",
        "6",
        "--format",
        "dot",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("digraph G"));
    assert!(text.contains("V0 -> V1 [label=\"3\", style=bold]"));
}

#[test]
fn glue_reads_words_file() {
    let dir = tempfile::tempdir().unwrap();
    let words = dir.path().join("w.txt");
    std::fs::write(&words, "21, 211\n1\n").unwrap();
    let o = negbeta(&[
        "glue",
        "--beta",
        "golden",
        "--words",
        words.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["admissible"], true);
    assert!(v["result"]["block"].as_str().unwrap().starts_with("21"));
}

#[test]
fn measure_is_exact() {
    let o = negbeta(&["measure", "--beta", "golden", "--n", "8", "--m", "3"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["normalized"], true);
    assert_eq!(v["result"]["consistent"], true);
}

#[test]
fn outputs_are_deterministic() {
    let run = || negbeta(&["measure", "--beta", "golden", "--n", "7", "--m", "3"]).stdout;
    assert_eq!(run(), run());
}

#[test]
fn exit_codes() {
    assert_eq!(negbeta(&["expand", "--beta", "1/2"]).status.code(), Some(2));
    assert_eq!(
        negbeta(&["expand", "--beta", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(
        negbeta(&["graph", "--beta", "golden", "--format", "csv"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(negbeta(&["factor", "--beta", "5/2"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let b = dir.path().join("b.txt");
    std::fs::write(&b, "2 1 1 1").unwrap();
    let o = negbeta(&["graph", "--b-file", b.to_str().unwrap(), "--K", "12"]);
    assert_eq!(
        o.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let o = negbeta(&[
        "expand",
        "--beta",
        "golden",
        "--precision-bits",
        "8",
        "--n",
        "40",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["result"]["certified"].as_u64().unwrap() < 40);
}

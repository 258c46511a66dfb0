use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::tempdir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_delannoy-lab"));
    cmd.env_remove("DELANNOY_LAB_OUT_DIR");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/default_suite.jsonl")
}

#[test]
fn verify_dnsquare_prints_26_passes() {
    let o = run(&["verify", "--claims", "EQ_DNSQUARE", "--n-max", "25"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 26);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn verify_thm51_small_primes() {
    let o = run(&[
        "verify", "--claims", "THM51", "--primes", "3,5", "--format", "jsonl",
    ]);
    assert_eq!(o.status.code(), Some(0));
    // 81 exhaustive residues for p=3, 128 samples for p=5
    assert_eq!(stdout(&o).lines().count(), 81 + 128);
}

#[test]
fn unknown_claim_is_a_usage_error() {
    let o = run(&["verify", "--claims", "BOGUS"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("BOGUS"));
    assert!(err.contains("usage"));
}

#[test]
fn bad_flags_and_primes_exit_1() {
    assert_eq!(run(&["verify", "--primes", "4"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--n-max", "0"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--format", "yaml"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["eval", "qbinom", "--n", "4"]).status.code(), Some(1));
}

#[test]
fn eval_canonical_forms() {
    for (args, expect) in [
        (&["eval", "d", "--n", "1"][..], "2*x + 1"),
        (
            &["eval", "qbinom", "--n", "4", "--k", "2"][..],
            "q^4 + q^3 + 2*q^2 + q + 1",
        ),
        (&["eval", "cyclotomic", "--d", "1"][..], "q - 1"),
        (&["eval", "cyclotomic", "--d", "6"][..], "q^2 - q + 1"),
        (&["eval", "Dq", "--m", "1", "--n", "1"][..], "q + 2"),
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o).trim_end(), expect, "{args:?}");
    }
}

#[test]
fn text_and_jsonl_agree() {
    let args = [
        "verify",
        "--claims",
        "CONG_SUN1,CONJ_SUNFINAL,EQ_SIMPLE",
        "--primes",
        "3,5",
        "--n-max",
        "6",
        "--no-timing",
    ];
    let text = stdout(&run(&args));
    let mut jargs = args.to_vec();
    jargs.extend(["--format", "jsonl"]);
    let jsonl = stdout(&run(&jargs));
    let t: Vec<(String, String)> = text
        .lines()
        .map(|l| {
            let mut it = l.split_whitespace();
            (
                it.next().unwrap().to_lowercase(),
                it.next().unwrap().to_string(),
            )
        })
        .collect();
    let j: Vec<(String, String)> = jsonl
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            (
                v["status"].as_str().unwrap().to_string(),
                v["claim"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(t, j);
    assert!(j.iter().any(|(s, _)| s == "skipped"));
    assert!(j.iter().any(|(s, _)| s == "conjecture-consistent"));
}

#[test]
fn jsonl_records_have_expected_fields() {
    let o = run(&[
        "verify",
        "--claims",
        "EQ_SYMMETRY",
        "--n-max",
        "3",
        "--format",
        "jsonl",
    ]);
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["claim", "elapsed_ms", "params", "status"]);
        assert!(v["elapsed_ms"].as_f64().unwrap() >= 0.0);
    }
}

#[test]
fn config_file_with_cli_precedence() {
    let dir = tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(
        &cfg,
        "# small run\nclaims = EQ_SALT\nn_max = 9\nformat = jsonl\nno_timing = true\n",
    )
    .unwrap();
    let cfg_s = cfg.to_str().unwrap();
    let o = run(&["verify", "--config", cfg_s]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 10);
    assert!(stdout(&o).starts_with("{\"claim\":\"EQ_SALT\""));
    let o = run(&[
        "verify", "--config", cfg_s, "--n-max", "2", "--format", "text",
    ]);
    assert_eq!(stdout(&o).lines().count(), 3);
    assert!(stdout(&o).starts_with("PASS"));
    fs::write(&cfg, "claims EQ_SALT\n").unwrap();
    assert_eq!(run(&["verify", "--config", cfg_s]).status.code(), Some(1));
}

#[test]
fn output_file_and_env_directory() {
    let dir = tempdir().unwrap();
    let out = dir.path().join("nested/out.jsonl");
    let o = run(&[
        "verify",
        "--claims",
        "REC_ZEIL1",
        "--n-max",
        "4",
        "--format",
        "jsonl",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 5);

    let o = bin()
        .args(["verify", "--claims", "REC_ZEIL1", "--n-max", "2"])
        .env("DELANNOY_LAB_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(dir.path().join("report.txt"))
            .unwrap()
            .lines()
            .count(),
        3
    );
}

#[test]
fn default_suite_matches_golden() {
    let o = run(&["verify", "--format", "jsonl", "--no-timing"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let path = golden_path();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &o.stdout).unwrap();
    }
    let golden = fs::read(&path).expect("golden file present; regenerate with UPDATE_GOLDEN=1");
    assert!(
        o.stdout == golden,
        "default suite output differs from {}",
        path.display()
    );
}

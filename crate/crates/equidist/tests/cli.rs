//! End-to-end tests of the `equidist` binary.

use std::collections::HashMap;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_equidist")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(bin());
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn fmt12(v: f64) -> String {
    format!("{v:.11e}")
}

#[test]
fn roots_fixture_table() {
    let out = run(&["roots", "--f", "1,0,1", "--x", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1:1:0\n2:1:1\n3:0:\n4:0:\n5:2:2,3\n");
}

#[test]
fn roots_prime_filter() {
    let out = run(&["roots", "--f", "1,0,1", "--x", "5", "--moduli", "prime"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2:1:1\n3:0:\n5:2:2,3\n");
}

#[test]
fn roots_rejects_zero_polynomial() {
    let out = run(&["roots", "--f", "0", "--x", "5"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("zero polynomial"), "stderr: {}", stderr(&out));
}

#[test]
fn roots_rejects_bad_coefficient_with_position() {
    let out = run(&["roots", "--f", "1,x,1", "--x", "5"]);
    assert!(!out.status.success());
    let err = stderr(&out);
    assert!(err.contains("position 2"), "stderr: {err}");
}

#[test]
fn weyl_csv_shape_and_zero_frequency() {
    let out = run(&[
        "weyl", "--f", "1,0,1", "--x", "100", "--freq", "0:0,1:0", "--allow-zero",
        "--checkpoints", "10,100",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,h1,h2,re,im,abs,m");
    // 2 checkpoints x 2 frequencies
    assert_eq!(lines.len(), 1 + 4);
    // the trivial frequency has |W| exactly 1
    let first: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(first[0], "10");
    assert_eq!(first[1], "0");
    assert_eq!(first[2], "0");
    assert_eq!(first[5], "1.00000000000e0");
}

#[test]
fn weyl_rejects_trivial_frequency_without_flag() {
    let out = run(&["weyl", "--f", "1,0,1", "--x", "100", "--freq", "0:0"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("allow-zero"), "stderr: {}", stderr(&out));
}

#[test]
fn weyl_deduplicates_frequencies() {
    let out = run(&[
        "weyl", "--f", "1,0,1", "--x", "50", "--freq", "1:0,1:0,0:1", "--checkpoints", "50",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 2, "{text}");
}

#[test]
fn weyl_checkpoints_must_end_at_x() {
    let out = run(&["weyl", "--f", "1,0,1", "--x", "100", "--freq", "1:0", "--checkpoints", "10,50"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("last checkpoint"), "stderr: {}", stderr(&out));
}

#[test]
fn weyl_empty_sequence_is_an_error() {
    let out = run(&["weyl", "--f", "1,0,1", "--x", "1", "--moduli", "prime", "--freq", "1:0"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("no root pairs below cutoff"), "stderr: {}", stderr(&out));
}

#[test]
fn equidist_json_report_is_complete() {
    let out = run(&[
        "equidist", "--f", "1,0,1", "--g", "-2,0,1", "--x", "200", "--checkpoints", "10,100,200",
        "--freq", "1:1", "--grid", "64",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["f"], "1,0,1");
    assert_eq!(v["g_pretty"], "x^2 - 2");
    let cps = v["checkpoints"].as_array().unwrap();
    assert_eq!(cps.len(), 3);
    for cp in cps {
        // counting ratio present for every checkpoint
        assert!(cp["counting_ratio"].is_f64(), "{cp}");
        assert!(cp["m_pairs"].as_u64().unwrap() > 0);
        assert!(cp["weyl"].as_array().unwrap().len() == 1);
        assert!(cp["boxes"].as_array().unwrap().len() == 1);
        assert!(cp["discrepancy"]["lower"].is_f64());
        // f != g: no diagonal section
        assert!(cp["diagonal"].is_null());
    }
}

#[test]
fn equidist_diagonal_present_when_polynomials_match() {
    let out = run(&["equidist", "--f", "1,0,1", "--x", "100", "--moduli", "prime"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for cp in v["checkpoints"].as_array().unwrap() {
        assert_eq!(cp["diagonal"]["fraction"].as_f64().unwrap(), 1.0);
    }
}

#[test]
fn equidist_csv_and_json_agree_to_printed_precision() {
    let args_common = [
        "equidist", "--f", "1,0,1", "--g", "-2,0,1", "--x", "500", "--checkpoints", "100,500",
        "--freq", "1:0,2:-3", "--rect", "0:0.5:0:0.5,0.25:0.75:0:1", "--grid", "32",
    ];
    let json_out = run(&[&args_common[..], &["--format", "json"]].concat());
    let csv_out = run(&[&args_common[..], &["--format", "csv"]].concat());
    assert!(json_out.status.success() && csv_out.status.success());

    let v: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    let csv_text = stdout(&csv_out);
    let mut lines = csv_text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let rows: Vec<HashMap<&str, &str>> = lines
        .map(|l| header.iter().copied().zip(l.split(',')).collect())
        .collect();
    assert_eq!(rows.len(), 2);

    for (row, cp) in rows.iter().zip(v["checkpoints"].as_array().unwrap()) {
        assert_eq!(row["x"], cp["x"].as_u64().unwrap().to_string());
        assert_eq!(row["m"], cp["m_pairs"].as_u64().unwrap().to_string());
        let weyl = cp["weyl"].as_array().unwrap();
        assert_eq!(row["w_abs_1_0"], fmt12(weyl[0]["abs"].as_f64().unwrap()));
        assert_eq!(row["w_abs_2_-3"], fmt12(weyl[1]["abs"].as_f64().unwrap()));
        let boxes = cp["boxes"].as_array().unwrap();
        assert_eq!(row["box0_observed"], fmt12(boxes[0]["observed"].as_f64().unwrap()));
        assert_eq!(row["box1_deviation"], fmt12(boxes[1]["deviation"].as_f64().unwrap()));
        assert_eq!(row["disc_lower"], fmt12(cp["discrepancy"]["lower"].as_f64().unwrap()));
        assert_eq!(row["disc_upper"], fmt12(cp["discrepancy"]["upper"].as_f64().unwrap()));
        assert_eq!(row["counting_ratio"], fmt12(cp["counting_ratio"].as_f64().unwrap()));
        assert_eq!(row["density_f"], fmt12(cp["split"]["density_f"].as_f64().unwrap()));
        assert_eq!(row["density_joint"], fmt12(cp["split"]["density_joint"].as_f64().unwrap()));
        // f != g: diagonal column empty
        assert_eq!(row["diag_fraction"], "");
    }
}

#[test]
fn cache_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("roots.cache");
    let cache_str = cache.to_str().unwrap();

    let cold = run(&["roots", "--f", "1,0,1", "--x", "300", "--cache", cache_str]);
    assert!(cold.status.success(), "stderr: {}", stderr(&cold));
    assert!(cache.exists());
    let cache_after_cold = std::fs::read_to_string(&cache).unwrap();

    let warm = run(&["roots", "--f", "1,0,1", "--x", "300", "--cache", cache_str]);
    assert!(warm.status.success());
    assert_eq!(stdout(&cold), stdout(&warm), "cold and warm reports differ");
    let cache_after_warm = std::fs::read_to_string(&cache).unwrap();
    assert_eq!(cache_after_cold, cache_after_warm);

    // a narrower filtered run is served from the same cache
    let primes = run(&["roots", "--f", "1,0,1", "--x", "300", "--moduli", "prime", "--cache", cache_str]);
    let primes_direct = run(&["roots", "--f", "1,0,1", "--x", "300", "--moduli", "prime"]);
    assert_eq!(stdout(&primes), stdout(&primes_direct));
}

#[test]
fn cache_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env.cache");
    let out = run_env(
        &["roots", "--f", "1,0,1", "--x", "50"],
        &[("EQUIDIST_CACHE", cache.to_str().unwrap())],
    );
    assert!(out.status.success());
    assert!(cache.exists(), "EQUIDIST_CACHE default was not used");
}

#[test]
fn cache_for_wrong_polynomial_fails_loudly() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("roots.cache");
    let cache_str = cache.to_str().unwrap();
    let cold = run(&["roots", "--f", "1,0,1", "--x", "100", "--cache", cache_str]);
    assert!(cold.status.success());
    let other = run(&["roots", "--f", "-2,0,1", "--x", "100", "--cache", cache_str]);
    assert!(!other.status.success());
    assert!(stderr(&other).contains("cache"), "stderr: {}", stderr(&other));
}

#[test]
fn threads_flag_does_not_change_bytes() {
    let base = [
        "equidist", "--f", "1,0,1", "--x", "2000", "--checkpoints", "1000,2000", "--freq", "1:1",
    ];
    let one = run(&[&base[..], &["--threads", "1"]].concat());
    let many = run(&[&base[..], &["--threads", "7"]].concat());
    assert!(one.status.success() && many.status.success());
    assert_eq!(stdout(&one), stdout(&many));
}

#[test]
fn selftest_passes_and_is_thread_independent() {
    let a = run_env(&["selftest"], &[("RAYON_NUM_THREADS", "1")]);
    let b = run_env(&["selftest"], &[("RAYON_NUM_THREADS", "4")]);
    assert!(a.status.success());
    assert!(b.status.success());
    assert_eq!(stdout(&a), stdout(&b), "selftest output depends on thread count");
    assert!(stdout(&a).contains("all suites passed"));
    assert!(stdout(&a).contains("roots-vs-brute-force"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = run(&[
        "weyl", "--f", "1,0,1", "--x", "100", "--freq", "1:0", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("x,h1,h2,"));
}

#[test]
fn io_errors_carry_path_context() {
    let out = run(&[
        "weyl", "--f", "1,0,1", "--x", "50", "--freq", "1:0", "--out",
        "/nonexistent-dir/report.csv",
    ]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("/nonexistent-dir/report.csv"), "stderr: {}", stderr(&out));
}

#[test]
fn inconclusive_irreducibility_warns_but_proceeds() {
    // x^4 + 1 factors mod every prime: screening cannot certify it
    let out = run(&["weyl", "--f", "1,0,0,0,1", "--x", "200", "--freq", "1:0"]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("warning"), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("unverified"));
}

#[test]
fn reducible_polynomial_is_rejected() {
    let out = run(&["weyl", "--f", "-1,0,1", "--x", "200", "--freq", "1:0"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("reducible"), "stderr: {}", stderr(&out));
}

use std::f64::consts::PI;
use std::fs;
use std::process::{Command, Output};

fn qdelta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdelta")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn pi_sum_golden() {
    let out = qdelta(&["pi-sum", "--n-min", "1", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,ratio_num,ratio_den,ok\n1,1,1,true\n2,1,1,true\n3,1,1,true\n4,1,1,true\n");
}

#[test]
fn single_member() {
    let out = qdelta(&["pi-sum", "--n-min", "1", "--n-max", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows, serde_json::json!([{"n": 1, "ratio_num": "1", "ratio_den": "1", "ok": true}]));
}

#[test]
fn output_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = qdelta(&["cq-scan", "--q-steps", "7", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let first = fs::read(&a).unwrap();
    assert_eq!(first, fs::read(&b).unwrap());
    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with("q,c_numeric,c_closed,rel_dev\n"));
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn cq_scan_reproduces_closed_form() {
    let out = qdelta(&["cq-scan", "--q-min", "1.5", "--q-max", "1.99", "--q-steps", "2", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert!((rows[0]["c_closed"].as_f64().unwrap() - 4.0 * PI).abs() < 1e-12);
    for row in &rows {
        assert!(row["rel_dev"].as_f64().unwrap() < 1e-6);
    }
}

#[test]
fn delta_profile_peak_and_symmetry() {
    let out = qdelta(&[
        "delta-profile", "--q", "1.5", "--lambda", "10", "--lambda", "100", "--x-min", "-0.3", "--x-max", "0.3",
        "--x-steps", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<(f64, f64, f64)> = reader.deserialize().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[0].0, 10.0);
    assert!((rows[1].2 - 5.0 / PI).abs() < 1e-14);
    assert_eq!(rows[0].2, rows[2].2);
    assert!(rows[4].2 > rows[1].2);
}

#[test]
fn jk_default_grid() {
    let out = qdelta(&["jk", "--k-max", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.len(), 15);
    let lambdas: Vec<f64> = rows.iter().map(|r| r["lambda"].as_f64().unwrap()).collect();
    assert_eq!(lambdas[0], 10.0);
    assert_eq!(lambdas[14], 1e20);
}

#[test]
fn window_accepts_infinite_ends() {
    let out = qdelta(&["sifting", "--q", "1.4", "--function", "gaussian", "--window", "-inf,inf"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
    assert!(text.contains("\"-inf,inf\""));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["pi-integral", "--tol", "1e-20"],
        vec!["cq-scan", "--q-min", "2.5", "--q-max", "2.6"],
        vec!["jk", "--window", "1,-1"],
        vec!["pi-sum", "--n-min", "5", "--n-max", "2"],
        vec!["sifting", "--function", "nope"],
        vec!["no-such-command"],
    ] {
        let out = qdelta(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn qtrig_reduces_to_circular_functions_at_unity() {
    let out = qdelta(&["qtrig", "--q", "1", "--x-steps", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    for row in reader.deserialize::<(f64, f64, f64, f64, f64, f64, f64)>() {
        let (_, _, qc, qs, c, s, m) = row.unwrap();
        assert_eq!((qc, qs, m), (c, s, 1.0));
    }
}

#[test]
fn norm_rows_match_closed_form() {
    let out = qdelta(&["norm", "--q-min", "1.5", "--q-max", "2.5", "--q-steps", "3", "--xi", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<(f64, f64, f64, f64, f64)> = reader.deserialize().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.4 < 1e-8));
}

//! End-to-end tests of the `qpd` binary: the documented invocations, the
//! CSV/JSON contracts, round-tripping, determinism and exit codes.

use std::process::{Command, Output};

use qpd::engine::{self, GameConfig, PayoffTable, Strategy};
use qpd::noise::DecoherenceParams;
use qpd::rindler::{Acceleration, Entanglement};

fn qpd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpd"))
        .args(args)
        .output()
        .expect("spawn qpd")
}

fn stdout(args: &[&str]) -> String {
    let out = qpd(args);
    assert!(
        out.status.success(),
        "qpd {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    qpd(args).status.code().expect("exit code")
}

#[test]
fn payoff_classical_row() {
    let out = stdout(&[
        "payoff", "--gamma", "0", "--r", "0", "--p1", "0", "--p2", "0", "--alice", "C", "--bob",
        "C",
    ]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        "gamma,r,p1,p2,alpha_A,theta_A,alpha_B,theta_B,payoff_A,payoff_B"
    );
    let row = lines.next().unwrap();
    assert!(row.ends_with(",3,3"), "row: {row}");
}

#[test]
fn payoff_decohered_miracle_row() {
    // Exact pi fractions give the clean fair-game endpoint.
    let out = stdout(&[
        "payoff", "--gamma", "pi/2", "--p", "1", "--r", "pi/4", "--alice", "M", "--bob", "D",
    ]);
    let row = out.lines().nth(1).unwrap();
    assert!(row.ends_with(",2.25,2.25"), "row: {row}");

    // The same point given as truncated decimals (as it is often typed)
    // snaps into range and lands within rounding of the same payoffs.
    let out = stdout(&[
        "payoff",
        "--gamma",
        "1.5707963",
        "--p",
        "1",
        "--r",
        "0.7853982",
        "--alice",
        "M",
        "--bob",
        "D",
    ]);
    let row = out.lines().nth(1).unwrap();
    let cols: Vec<f64> = row.split(',').map(|x| x.parse().unwrap()).collect();
    assert!((cols[8] - 2.25).abs() < 1e-6, "payoff_A: {}", cols[8]);
    assert!((cols[9] - 2.25).abs() < 1e-6, "payoff_B: {}", cols[9]);
}

#[test]
fn payoff_pair_specifier_matches_named() {
    let named = stdout(&["payoff", "--alice", "C", "--bob", "C"]);
    let pair = stdout(&["payoff", "--alice", "0,0", "--bob", "0,0"]);
    assert_eq!(named, pair);
}

#[test]
fn table_decohered_bob_restores_classical_values() {
    let out = stdout(&[
        "table", "--gamma", "0", "--p2", "1", "--r", "0.5", "--set", "C,D",
    ]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    let payoffs: Vec<(f64, f64)> = rows
        .iter()
        .map(|row| {
            let cols: Vec<f64> = row.split(',').map(|x| x.parse().unwrap()).collect();
            (cols[8], cols[9])
        })
        .collect();
    let expect = [(3.0, 3.0), (0.0, 5.0), (5.0, 0.0), (1.0, 1.0)];
    for ((a, b), (wa, wb)) in payoffs.iter().zip(expect) {
        assert!((a - wa).abs() < 1e-10 && (b - wb).abs() < 1e-10);
    }
}

#[test]
fn table_fully_decohered_entangled_values() {
    let out = stdout(&[
        "table", "--gamma", "pi/2", "--p", "1", "--r", "pi/4", "--set", "C,D",
    ]);
    let payoffs: Vec<(f64, f64)> = out
        .lines()
        .skip(1)
        .map(|row| {
            let cols: Vec<f64> = row.split(',').map(|x| x.parse().unwrap()).collect();
            (cols[8], cols[9])
        })
        .collect();
    let expect = [(2.0, 2.0), (2.5, 2.5), (2.5, 2.5), (2.0, 2.0)];
    for ((a, b), (wa, wb)) in payoffs.iter().zip(expect) {
        assert!((a - wa).abs() < 1e-10 && (b - wb).abs() < 1e-10);
    }
}

#[test]
fn table_closed_form_columns_agree() {
    let out = stdout(&[
        "table",
        "--gamma",
        "pi/2",
        "--p1",
        "0.3",
        "--p2",
        "0.8",
        "--r",
        "pi/8",
        "--set",
        "C,D",
        "--closed-form",
    ]);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().ends_with(",cf_payoff_A,cf_payoff_B"));
    for row in lines {
        let cols: Vec<f64> = row.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(cols.len(), 12);
        assert!((cols[8] - cols[10]).abs() < 1e-10);
        assert!((cols[9] - cols[11]).abs() < 1e-10);
    }
}

#[test]
fn sweep_single_point_matches_payoff() {
    let sweep = stdout(&[
        "sweep", "--gamma", "pi/2", "--p", "0.25", "--r", "pi/8", "--alice", "Q", "--bob", "D",
    ]);
    let payoff = stdout(&[
        "payoff", "--gamma", "pi/2", "--p", "0.25", "--r", "pi/8", "--alice", "Q", "--bob", "D",
    ]);
    assert_eq!(sweep, payoff);
}

#[test]
fn sweep_axis_grid_shape_and_roundtrip() {
    let out = stdout(&[
        "sweep",
        "--gamma",
        "pi/2",
        "--alice",
        "Q",
        "--bob",
        "C",
        "--axis",
        "p=0:1:5",
        "--axis",
        "thetaB=0:pi:3",
    ]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 15);
    // Re-parse each row and re-evaluate: payoff columns must reproduce.
    for row in rows {
        let cols: Vec<f64> = row.split(',').map(|x| x.parse().unwrap()).collect();
        let config = GameConfig {
            gamma: Entanglement::new(cols[0]).unwrap(),
            acceleration: Acceleration::new(cols[1]).unwrap(),
            noise: DecoherenceParams::new(cols[2], cols[3]).unwrap(),
            payoffs: PayoffTable::default(),
        };
        let alice = Strategy::new(cols[4], cols[5]).unwrap();
        let bob = Strategy::new(cols[6], cols[7]).unwrap();
        let pay = engine::play(&config, &alice, &bob).unwrap();
        assert!((pay.alice - cols[8]).abs() < 1e-12, "row: {row}");
        assert!((pay.bob - cols[9]).abs() < 1e-12, "row: {row}");
    }
}

#[test]
fn sweep_output_is_deterministic() {
    let a = stdout(&["sweep", "--figure", "2"]);
    let b = stdout(&["sweep", "--figure", "2"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 405);
}

#[test]
fn sweep_rejects_three_axes() {
    let code = exit_code(&[
        "sweep",
        "--axis",
        "p=0:1:3",
        "--axis",
        "r=0:pi/4:3",
        "--axis",
        "gamma=0:pi/2:3",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn validate_all_passes() {
    assert_eq!(exit_code(&["validate", "--case", "all"]), 0);
}

#[test]
fn validate_impossible_tolerance_fails() {
    assert_eq!(
        exit_code(&["validate", "--case", "table2", "--tol", "1e-30"]),
        1
    );
}

#[test]
fn validate_miracle_fully_decohered_grid() {
    let out = stdout(&["validate", "--case", "e16", "--grid", "p=1"]);
    let row = out.lines().nth(1).unwrap();
    let cols: Vec<&str> = row.split(',').collect();
    assert_eq!(cols[0], "e16");
    let deviation: f64 = cols[2].parse().unwrap();
    assert!(deviation < 1e-12, "deviation {deviation}");
    assert_eq!(cols[4], "pass");
}

#[test]
fn validate_unknown_case_is_usage_error() {
    assert_eq!(exit_code(&["validate", "--case", "e99"]), 2);
}

#[test]
fn equilibria_classical_defaults() {
    let out = stdout(&["equilibria"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["strategies"], serde_json::json!(["C", "D"]));
    assert_eq!(v["nash"].as_array().unwrap().len(), 1);
    assert_eq!(v["nash"][0]["alice"], "D");
    assert_eq!(v["nash"][0]["bob"], "D");
    assert_eq!(v["dominant"]["alice"], "D");
    assert_eq!(v["dominant"]["bob"], "D");
    assert_eq!(v["pareto_optimal"].as_array().unwrap().len(), 3);
}

#[test]
fn equilibria_decohered_limit_mixed_profiles() {
    let out = stdout(&[
        "equilibria",
        "--gamma",
        "pi/2",
        "--p",
        "1",
        "--r",
        "pi/4",
        "--set",
        "C,D",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let nash = v["nash"].as_array().unwrap();
    let labels: Vec<(String, String)> = nash
        .iter()
        .map(|n| {
            (
                n["alice"].as_str().unwrap().into(),
                n["bob"].as_str().unwrap().into(),
            )
        })
        .collect();
    assert_eq!(
        labels,
        vec![("C".into(), "D".into()), ("D".into(), "C".into())]
    );
    let pareto = v["pareto_optimal"].as_array().unwrap();
    assert_eq!(pareto.len(), 2);
    assert_eq!(v["dominant"]["alice"], serde_json::Value::Null);
}

#[test]
fn equilibria_singleton_set() {
    let out = stdout(&["equilibria", "--set", "C"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["nash"].as_array().unwrap().len(), 1);
    assert_eq!(v["pareto_optimal"].as_array().unwrap().len(), 1);
    assert_eq!(v["dominant"]["alice"], "C");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("qpd-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("row.csv");
    let _ = std::fs::remove_file(&path);
    let out = stdout(&[
        "payoff",
        "--alice",
        "D",
        "--bob",
        "C",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.is_empty());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.lines().nth(1).unwrap().ends_with(",5,0"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn usage_errors_name_the_flag_and_range() {
    let out = qpd(&["payoff", "--r", "2.0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--r"), "stderr: {err}");
    assert!(err.contains("[0, pi/4]"), "stderr: {err}");

    assert_eq!(exit_code(&["payoff", "--gamma", "3.2"]), 2);
    assert_eq!(exit_code(&["payoff", "--p", "1.5"]), 2);
    assert_eq!(exit_code(&["payoff", "--alice", "Z"]), 2);
    assert_eq!(exit_code(&["payoff", "--alice", "0,9"]), 2);
    assert_eq!(exit_code(&["nonsense"]), 2);
    // --p conflicts with --p1/--p2.
    assert_eq!(exit_code(&["payoff", "--p", "0.5", "--p1", "0.5"]), 2);
}

#[test]
fn figure_two_reports_crossing_on_stderr() {
    let out = qpd(&["sweep", "--figure", "2"]);
    assert!(out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with('#'), "stderr: {err}");
    assert!(err.contains("p > 0.86"), "stderr: {err}");
}

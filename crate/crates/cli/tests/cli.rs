use std::process::{Command, Output};

use serde_json::Value;

fn triharm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triharm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn small_sphere_is_proper() {
    let out = triharm(&[
        "check",
        "--curvature",
        "1",
        "--n",
        "4",
        "--family",
        "small-sphere",
        "--param",
        "r2=1/3",
        "--expect",
        "proper",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["verdict"], "ProperTriharmonic");
    assert_eq!(v["invariants"]["H2"], "2");
    assert_eq!(v["invariants"]["S"], "8");
    assert_eq!(v["invariants"]["R"], "36");
    assert_eq!(v["residual"], "0");
}

#[test]
fn horosphere_residual() {
    let out = triharm(&[
        "check",
        "--curvature",
        "-1",
        "--n",
        "3",
        "--family",
        "horosphere",
        "--expect",
        "not",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["residual"], "27");
}

#[test]
fn wrong_expectation_exits_one() {
    let out = triharm(&[
        "check",
        "--curvature",
        "-1",
        "--n",
        "3",
        "--family",
        "horosphere",
        "--expect",
        "proper",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &[
            "check",
            "--curvature",
            "1",
            "--n",
            "3",
            "--family",
            "small-sphere",
            "--param",
            "r2=2",
        ],
        &[
            "check",
            "--curvature",
            "1",
            "--n",
            "3",
            "--family",
            "small-sphere",
            "--param",
            "r2=0.5",
        ],
        &[
            "check",
            "--curvature",
            "1",
            "--n",
            "3",
            "--family",
            "nosuch",
        ],
        &[
            "check",
            "--curvature",
            "0",
            "--n",
            "3",
            "--family",
            "small-sphere",
            "--param",
            "r2=1/2",
        ],
        &[
            "check",
            "--curvature",
            "1",
            "--n",
            "3",
            "--family",
            "small-sphere",
            "--param",
            "r=1/2",
        ],
        &[
            "check",
            "--curvature",
            "1",
            "--n",
            "3",
            "--family",
            "small-sphere",
        ],
        &[
            "check",
            "--curvature",
            "2",
            "--n",
            "3",
            "--family",
            "horosphere",
        ],
        &["corollary", "--n", "2", "--digits", "40"],
        &[
            "scan",
            "--curvature",
            "0",
            "--n",
            "4",
            "--family",
            "cylinder",
            "--param",
            "p=2",
            "--param-range",
            "r=1:2:1",
        ],
        &[
            "scan",
            "--curvature",
            "0",
            "--n",
            "4",
            "--family",
            "cylinder",
            "--param-range",
            "p=1:3:4",
            "--param",
            "r=1",
        ],
        &["identities", "--suite", "nosuch"],
    ];
    for args in cases {
        assert_eq!(code(&triharm(args)), 2, "{args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&triharm(&["--help"])), 0);
    assert_eq!(code(&triharm(&["--version"])), 0);
}

#[test]
fn corollary_reports_bracket_and_residual() {
    let out = triharm(&["corollary", "--n", "3", "--digits", "40"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let c = &v["corollary"];
    assert!(c["t0"]
        .as_str()
        .unwrap()
        .starts_with("0.3221875321117678009017183878698994583186"));
    assert_eq!(c["t0_bracket"].as_array().unwrap().len(), 2);
    assert!(c["residual"].is_string());
    assert_eq!(c["resultant"]["quotient"], "324*t");
}

#[test]
fn corollary_n12_within_budget() {
    let start = std::time::Instant::now();
    let out = triharm(&["corollary", "--n", "12", "--digits", "60"]);
    assert_eq!(code(&out), 0);
    assert!(start.elapsed().as_secs_f64() < 5.0);
}

#[test]
fn identity_suites_pass() {
    for suite in [
        "lemma3",
        "lemma4",
        "vandermonde",
        "theorem3",
        "r6",
        "certificates",
        "all",
    ] {
        let out = triharm(&["identities", "--suite", suite, "--no-timing"]);
        assert_eq!(code(&out), 0, "{suite}");
        let v = json(&out);
        assert!(!v["checks"].as_array().unwrap().is_empty());
    }
}

fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("param,H2,S,R,residual,verdict"));
    lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn geodesic_sphere_sweep_has_no_proper_rows() {
    let out = triharm(&[
        "scan",
        "--curvature",
        "-1",
        "--n",
        "3",
        "--family",
        "geodesic-sphere",
        "--param-range",
        "lambda=101/100:5:200",
    ]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 200);
    assert!(rows.iter().all(|r| r[5] != "ProperTriharmonic"));
}

#[test]
fn euclidean_cylinder_sweep_has_no_proper_rows() {
    let out = triharm(&[
        "scan",
        "--curvature",
        "0",
        "--n",
        "4",
        "--family",
        "cylinder",
        "--param",
        "p=2",
        "--param-range",
        "r=1/10:10:100",
    ]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 100);
    assert!(rows.iter().all(|r| r[5] == "NotTriharmonic"));
}

#[test]
fn small_sphere_residual_changes_sign_once() {
    let out = triharm(&[
        "scan",
        "--curvature",
        "1",
        "--n",
        "4",
        "--family",
        "small-sphere",
        "--param-range",
        "r2=1/20:19/20:181",
    ]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 181);
    let signs: Vec<i32> = rows
        .iter()
        .map(|r| match r[4].as_str() {
            "0" => 0,
            s if s.starts_with('-') => -1,
            _ => 1,
        })
        .collect();
    let changes: Vec<usize> = (1..signs.len())
        .filter(|&i| signs[i] != signs[i - 1])
        .collect();
    assert_eq!(changes.len(), 1);
    assert!(signs.iter().all(|&s| s != 0));
    // 1/3 lies strictly between the two samples around the change
    let i = changes[0];
    let lo: Vec<i64> = rows[i - 1][0]
        .split('/')
        .map(|x| x.parse().unwrap())
        .collect();
    let hi: Vec<i64> = rows[i][0].split('/').map(|x| x.parse().unwrap()).collect();
    assert!(3 * lo[0] < lo[1] && 3 * hi[0] > hi[1]);
}

#[test]
fn csv_rows_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = triharm(&[
        "scan",
        "--curvature",
        "1",
        "--n",
        "5",
        "--family",
        "clifford",
        "--param",
        "p=3",
        "--param",
        "q=2",
        "--param-range",
        "a2=1/10:9/10:17",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows.len(), 17);
    for row in rows.iter().step_by(4) {
        let a2 = format!("a2={}", row[0]);
        let re = triharm(&[
            "check",
            "--curvature",
            "1",
            "--n",
            "5",
            "--family",
            "clifford",
            "--param",
            "p=3",
            "--param",
            "q=2",
            "--param",
            &a2,
        ]);
        let v = json(&re);
        assert_eq!(v["verdict"], row[5]);
        assert_eq!(v["residual"], row[4]);
        assert_eq!(v["invariants"]["H2"], row[1]);
    }
}

#[test]
fn dimension_sweep_covers_horospheres() {
    let out = triharm(&[
        "scan",
        "--curvature",
        "-1",
        "--n",
        "2",
        "--family",
        "horosphere",
        "--param-range",
        "n=2:11:10",
    ]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 10);
    // residual S^2 + nS + n^2 H^2 = 3n^2 with all curvatures 1
    for r in &rows {
        let n: i64 = r[0].parse().unwrap();
        assert_eq!(r[4], (3 * n * n).to_string());
    }
}

#[test]
fn json_sweep_lists_rows() {
    let out = triharm(&[
        "scan",
        "--curvature",
        "-1",
        "--n",
        "4",
        "--family",
        "equidistant",
        "--param-range",
        "lambda=1/10:9/10:9",
        "--out",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    assert_eq!(v["rows"][0]["param"], "1/10");
}

#[test]
fn output_is_deterministic_without_timing() {
    let runs: &[&[&str]] = &[
        &[
            "check",
            "--curvature",
            "1",
            "--n",
            "3",
            "--family",
            "clifford",
            "--param",
            "p=2",
            "--param",
            "q=1",
            "--param",
            "a2=1/2",
            "--no-timing",
        ],
        &["corollary", "--n", "4", "--digits", "30", "--no-timing"],
        &[
            "identities",
            "--suite",
            "all",
            "--cases",
            "200",
            "--no-timing",
        ],
        &[
            "scan",
            "--curvature",
            "0",
            "--n",
            "3",
            "--family",
            "sphere",
            "--param-range",
            "r=1/2:4:50",
        ],
    ];
    for args in runs {
        let a = triharm(args);
        let b = triharm(args);
        assert_eq!(code(&a), 0, "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn timing_is_the_only_difference() {
    let args = [
        "check",
        "--curvature",
        "1",
        "--n",
        "4",
        "--family",
        "small-sphere",
        "--param",
        "r2=1/2",
    ];
    let mut timed = json(&triharm(&args));
    let plain = json(&triharm(&[&args[..], &["--no-timing"]].concat()));
    assert!(timed.as_object_mut().unwrap().remove("timing").is_some());
    timed["command"] = plain["command"].clone();
    assert_eq!(timed, plain);
}

use std::process::{Command, Output};

use serde_json::Value;
use zetalab::decompose::ZetaCombination;
use zetalab::{decompose, legendre_coeffs};

fn zetalab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetalab"))
        .args(args)
        .env_remove("ZETALAB_CACHE")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn poly_and_validation() {
    let out = zetalab(&["poly", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), serde_json::json!(["1", "-6", "6"]));

    let out = zetalab(&["poly", "--n", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n must be ≥ 0"));
    assert!(out.stdout.is_empty());
}

#[test]
fn decompose_outputs() {
    let out = zetalab(&["decompose", "--n", "0", "--r", "3", "--v", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["zeta"], serde_json::json!({"5": "12"}));
    assert_eq!(v["B"], "12");

    let a = json(&zetalab(&[
        "decompose",
        "--coeffs",
        "1,-2",
        "--r",
        "2",
        "--v",
        "0",
    ]));
    let b = json(&zetalab(&["decompose", "--n", "1", "--r", "2", "--v", "0"]));
    assert_eq!(a, b);

    let out = zetalab(&["decompose", "--n", "0", "--r", "1", "--v", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("series diverges"));
}

#[test]
fn malformed_flags_exit_2() {
    for args in [
        &["verify", "--n", "x", "--r", "2", "--v", "0"][..],
        &[
            "decompose",
            "--n",
            "1",
            "--coeffs",
            "1",
            "--r",
            "2",
            "--v",
            "0",
        ],
        &[
            "scan", "--r", "2", "--v", "1", "--n-max", "2", "--format", "xml",
        ],
        &["frobnicate"],
        &["value", "--n", "1", "--r", "2", "--v", "1", "--prec", "3"],
    ] {
        assert_eq!(zetalab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn scan_csv_shape() {
    let out = zetalab(&[
        "scan", "--r", "3", "--v", "2", "--n-max", "0", "--prec", "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(&out.stdout[..]);
    let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        headers,
        [
            "n",
            "abs_c",
            "lcm_pow",
            "lcm_scaled",
            "exp_scaled",
            "ratio_to_prev"
        ]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0][1].starts_with("1.2443133"));
    assert_eq!(&rows[0][5], "");
}

#[test]
fn scan_and_verify_are_byte_identical() {
    let scan = [
        "scan",
        "--r",
        "2",
        "--v",
        "1",
        "--n-max",
        "10",
        "--prec",
        "30",
        "--seedless",
    ];
    assert_eq!(zetalab(&scan).stdout, zetalab(&scan).stdout);
    let verify = [
        "verify",
        "--n",
        "1",
        "--r",
        "2",
        "--v",
        "1",
        "--samples",
        "200000",
        "--seed",
        "5",
    ];
    let a = zetalab(&verify);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, zetalab(&verify).stdout);
    let v = json(&a);
    assert_eq!(v["mc"]["seed"], 5);
    assert_eq!(v["mc"]["samples"], 200000);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("results.jsonl");
    let p = path.to_str().unwrap();
    let fresh = zetalab(&["decompose", "--n", "4", "--r", "3", "--v", "2"]);
    let first = zetalab(&[
        "decompose",
        "--n",
        "4",
        "--r",
        "3",
        "--v",
        "2",
        "--cache",
        p,
    ]);
    let cached = zetalab(&[
        "decompose",
        "--n",
        "4",
        "--r",
        "3",
        "--v",
        "2",
        "--cache",
        p,
    ]);
    assert_eq!(fresh.stdout, first.stdout);
    assert_eq!(first.stdout, cached.stdout);

    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    let line: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    let stored = ZetaCombination::from_json(&line).unwrap();
    assert_eq!(stored, decompose(&legendre_coeffs(4), 3, 2).unwrap());

    // the environment variable supplies the same cache to a scan
    let out = Command::new(env!("CARGO_BIN_EXE_zetalab"))
        .args(["scan", "--r", "3", "--v", "2", "--n-max", "5"])
        .env("ZETALAB_CACHE", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn progress_goes_to_stderr() {
    let out = zetalab(&[
        "scan",
        "--r",
        "2",
        "--v",
        "1",
        "--n-max",
        "4",
        "--progress",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8_lossy(&out.stderr);
    assert_eq!(err.lines().count(), 5);
    assert!(!String::from_utf8_lossy(&out.stdout).contains("scan:"));
}

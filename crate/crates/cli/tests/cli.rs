use std::process::{Command, Output};

use refined_vw::enriques::chi_y;
use refined_vw::enriques::low_degree::beta1_golden;
use refined_vw::series::json::CanonicalJson;
use refined_vw::series::rational::int;
use refined_vw::series::{Ring, TRat};
use serde_json::Value;

fn refvw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_refvw")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = refvw(args);
    assert!(out.status.code().is_some_and(|c| c <= 1), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn trat(v: &Value) -> TRat {
    TRat::from_json(v).unwrap()
}

#[test]
fn vw_of_the_ideal_sheaf_of_a_point() {
    let v = json(&["vw", "--r", "1", "--beta-sq", "0", "--n", "-1", "--format", "json"]);
    let row = &v["rows"][0];
    assert_eq!(trat(&row["vw"]), TRat::from_poly(chi_y().scale(&int(2))));
    assert_eq!(row["square"], 1);
}

#[test]
fn vw_of_points_vanishes() {
    let v = json(&["vw", "--r", "0", "--n", "3", "--format", "json"]);
    assert!(trat(&v["rows"][0]["vw"]).is_zero());
}

#[test]
fn malformed_class_is_a_usage_error() {
    let out = refvw(&["vw", "--r", "1", "--beta-sq", "3", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid class"));
    assert_eq!(refvw(&["--q-order", "99", "pt"]).status.code(), Some(2));
}

#[test]
fn vw_csv_and_json_agree_exactly() {
    let args = ["vw", "--r-max", "2", "--square-max", "4", "--n-max", "1"];
    let v = json(&[&args[..], &["--format", "json"]].concat());
    let csv_out = refvw(&[&args[..], &["--format", "csv"]].concat());
    let mut reader = csv::Reader::from_reader(&csv_out.stdout[..]);
    let rows = v["rows"].as_array().unwrap();
    let mut count = 0;
    for (rec, row) in reader.deserialize::<std::collections::HashMap<String, String>>().zip(rows) {
        let rec = rec.unwrap();
        assert_eq!(rec["n"], row["n"].to_string());
        for key in ["vw", "vw_stripped", "omega_no"] {
            let cell: Value = serde_json::from_str(&rec[key]).unwrap();
            assert_eq!(trat(&cell), trat(&row[key]), "{key}");
        }
        count += 1;
    }
    assert_eq!(count, rows.len());
    assert!(count > 10);
}

#[test]
fn pt_table_reproduces_beta_1() {
    let v = json(&["--k-max", "1", "--d-max", "2", "--p-window", "3", "pt", "--format", "json"]);
    let golden = beta1_golden();
    let mut seen = 0;
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["t1_agree"], true);
        if row["agree"] != Value::Null {
            assert_eq!(row["agree"], true);
        }
        if row["a"] == 1 && row["b"] == 1 {
            let e = row["p_exp_times_2"].as_i64().unwrap();
            assert_eq!(trat(&row["pt_total"]), golden.coeff(e).unwrap());
            seen += 1;
        }
    }
    assert_eq!(seen, golden.len());
}

#[test]
fn single_item_and_negative_control() {
    let v = json(&["--q-order", "4", "--p-window", "3", "verify", "--only", "zagier", "--format", "json"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);

    let out = refvw(&["--q-order", "4", "--p-window", "3", "verify", "--only", "zagier", "--corrupt", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let loc = v["rows"][0]["first_mismatch"]["location"].as_str().unwrap();
    assert!(loc.contains("q^1"), "{loc}");
}

#[test]
fn output_is_byte_stable_across_thread_counts() {
    let args = ["--q-order", "4", "--p-window", "3", "--d-max", "3", "verify", "--suite", "jacobi", "--format", "json"];
    let run = |threads: &str| Command::new(env!("CARGO_BIN_EXE_refvw")).args(args).env("REFVW_THREADS", threads).output().unwrap().stdout;
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("1"));
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("refvw-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hae.csv");
    let out = refvw(&["--q-order", "6", "verify", "--only", "hae", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("identity,status,location,left,right"));
    assert!(text.contains("holomorphic anomaly equation,pass"));
    std::fs::remove_dir_all(dir).unwrap();
}

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use einsu::report::{from_csv, SolutionRecord, SweepRow};

fn einsu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_einsu")).args(args).env_remove("EINSU_PRECISION").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_first_case() {
    let o = einsu(&["solve", "--k1", "3", "--k", "2", "--p", "3"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "einsu/1");
    let recs: Vec<SolutionRecord> = serde_json::from_value(v["records"].clone()).unwrap();
    let c2: Vec<_> = recs.iter().filter(|r| r.case == "Case2").collect();
    assert_eq!(c2.len(), 2);
    assert!(c2.iter().all(|r| r.classification == "NonNaturallyReductive" && r.oracle == "verified"));
    assert!(c2[0].x12.starts_with("0.74609280187276"));
    assert_eq!(v["isometry"]["non_isometric"], true);
}

#[test]
fn solve_second_case() {
    let o = einsu(&["solve", "--k1", "2", "--k", "2", "--p", "3", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let recs: Vec<SolutionRecord> = from_csv(&stdout(&o)).unwrap();
    let c2: Vec<_> = recs.iter().filter(|r| r.case == "Case2").collect();
    assert_eq!(c2.len(), 2);
    assert_eq!(c2[1].x12_closed_form, "1/1");
    assert_eq!(c2[1].classification, "NaturallyReductive(i)");
    assert_eq!(c2[0].classification, "NonNaturallyReductive");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&einsu(&["solve", "--k1", "2", "--k", "2", "--p", "2"])), 2);
    assert_eq!(code(&einsu(&["solve", "--k1", "3", "--k", "2", "--p", "3", "--precision", "32"])), 2);
    assert_eq!(code(&einsu(&["verify", "--partition", "4,4,4"])), 2);
    assert_eq!(code(&einsu(&["verify", "--partition", "2,x"])), 2);
    assert_eq!(code(&einsu(&["sweep", "--k1", "5..2", "--k", "2", "--p", "3"])), 2);
    assert_eq!(code(&einsu(&["frobnicate"])), 2);
}

#[test]
fn precision_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_einsu"))
        .args(["solve", "--k1", "3", "--k", "2", "--p", "3"])
        .env("EINSU_PRECISION", "128")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["precision_bits"], 128);
}

#[test]
fn verify_partitions() {
    for part in ["2,2,2", "3,2,2", "2,2,2,2"] {
        let o = einsu(&["verify", "--partition", part, "--trials", "5"]);
        assert_eq!(code(&o), 0, "{part}: {}", stdout(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn certify_gate_and_pattern() {
    let o = einsu(&["certify", "--k1", "48", "--k", "2", "--p", "3"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let signs: Vec<i64> =
        v["remark1"]["points"].as_array().unwrap().iter().map(|p| p["sign"].as_i64().unwrap()).collect();
    assert_eq!(signs, [1, -1, 1, -1, 1]);

    let o = einsu(&["certify", "--k1", "4", "--k", "2", "--p", "3", "--format", "md"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("not applicable"));

    let o = einsu(&["certify", "--k1", "3", "--k", "2", "--p", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["monotonicity"]["passed"], true);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["solve", "--k1", "4", "--k", "2", "--p", "3"];
    assert_eq!(einsu(&args).stdout, einsu(&args).stdout);
    let args = ["verify", "--partition", "2,2,2", "--trials", "3", "--seed", "7"];
    assert_eq!(einsu(&args).stdout, einsu(&args).stdout);
}

fn sweep(dir: &Path, name: &str, format: &str, ranges: [&str; 3]) -> (i32, String) {
    let out = dir.join(name);
    let o = einsu(&[
        "sweep",
        "--k1",
        ranges[0],
        "--k",
        ranges[1],
        "--p",
        ranges[2],
        "--format",
        format,
        "--output",
        out.to_str().unwrap(),
    ]);
    (code(&o), fs::read_to_string(out).unwrap())
}

#[test]
fn sweep_counts_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let (c, text) = sweep(dir.path(), "s.json", "json", ["2..6", "2..3", "3..4"]);
    assert_eq!(c, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let rows: Vec<SweepRow> = serde_json::from_value(v["rows"].clone()).unwrap();
    assert_eq!(rows.len(), 20);
    let keys: Vec<_> = rows.iter().map(|r| r.params()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for r in &rows {
        assert!(r.theorem_met);
        if r.k1 > r.k {
            assert!(r.case2_solutions >= 2, "{r:?}");
        } else if r.k1 == r.k {
            assert!(r.case2_solutions >= 1, "{r:?}");
        }
    }
    // a second run finds every triple in the file and rewrites it unchanged
    let (c, again) = sweep(dir.path(), "s.json", "json", ["2..6", "2..3", "3..4"]);
    assert_eq!(c, 0);
    assert_eq!(text, again);
}

#[test]
fn sweep_csv_matches_json() {
    let dir = tempfile::tempdir().unwrap();
    let ranges = ["2..3", "2", "3..4"];
    let (_, json) = sweep(dir.path(), "a.json", "json", ranges);
    let (_, csv) = sweep(dir.path(), "a.csv", "csv", ranges);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let from_json: Vec<SweepRow> = serde_json::from_value(v["rows"].clone()).unwrap();
    let from_csv: Vec<SweepRow> = from_csv(&csv).unwrap();
    assert_eq!(from_json.len(), 4);
    assert_eq!(from_json, from_csv);
}

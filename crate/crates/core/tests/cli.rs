use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn horocount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horocount"))
        .args(args)
        .env_remove("HOROCOUNT_THREADS")
        .output()
        .expect("binary runs")
}

fn schema(command: &str) -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{command}.v1.json"));
    let text = std::fs::read_to_string(path).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&value).unwrap()
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn assert_valid(command: &str, doc: &Value) {
    let compiled = schema(command);
    let msgs: Vec<String> = match compiled.validate(doc) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("{command} output violates its schema: {msgs:?}");
}

const RUNS: &[&[&str]] = &[
    &["count", "--field", "d=1", "--cutoffs", "100,200", "--method", "both"],
    &["count", "--field", "rational", "--cutoffs", "10,1000"],
    &["count", "--field", "d=5", "--cutoffs", "50", "--method", "mobius"],
    &["zeta", "--field", "rational"],
    &["zeta", "--field", "d=7", "--cutoffs", "100000", "--tolerance", "1e-12"],
    &["classnum", "--field", "d=23"],
    &["classnum", "--field", "rational"],
    &["depths", "--field", "d=1", "--cutoffs", "-1,0,2,4,6"],
    &["horoballs", "--field", "d=3", "--cutoffs", "7"],
    &["horoballs", "--field", "rational", "--cutoffs", "6"],
    &["poincare", "--field", "d=1", "--s", "2.5", "--cutoffs", "10,100,1000"],
    &["poincare", "--field", "rational", "--s", "1.5", "--cutoffs", "10,100"],
    &["verify", "--field", "d=2", "--cutoffs", "150"],
];

#[test]
fn every_command_matches_its_schema() {
    for args in RUNS {
        let doc = json_of(&horocount(args));
        assert_eq!(doc["schema_version"], "horocount/v1");
        assert_valid(args[0], &doc);
    }
}

#[test]
fn schemas_reject_tampered_output() {
    let mut doc = json_of(&horocount(&["count", "--field", "d=1", "--cutoffs", "10"]));
    doc["records"][0]["method"] = Value::from("guess");
    assert!(!schema("count").is_valid(&doc));
    doc["records"][0].as_object_mut().unwrap().remove("field");
    assert!(!schema("count").is_valid(&doc));
}

#[test]
fn count_both_methods_report_identical_values() {
    let doc = json_of(&horocount(&["count", "--field", "d=1", "--cutoffs", "100,200", "--method", "both"]));
    let recs = doc["records"].as_array().unwrap();
    for pair in recs.chunks(2) {
        assert_eq!(pair[0]["method"], "brute");
        assert_eq!(pair[1]["method"], "mobius");
        assert_eq!(pair[0]["value"], pair[1]["value"]);
        assert_eq!(pair[0]["x"], pair[1]["x"]);
    }
    assert_eq!(recs[0]["field"]["D"], 4);
    assert_eq!(recs[0]["field"]["w"], 4);
}

#[test]
fn rational_zeta_is_pi_squared_over_six() {
    let doc = json_of(&horocount(&["zeta", "--field", "rational"]));
    let v = doc["records"][0]["value"].as_f64().unwrap();
    assert!((v - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-10);
}

#[test]
fn verify_reports_each_property() {
    let out = horocount(&["verify", "--field", "d=3", "--cutoffs", "500"]);
    let doc = json_of(&out);
    assert_eq!(doc["passed"], true);
    let names: Vec<&str> = doc["records"].as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap()).collect();
    for expected in ["mobius_equals_brute", "zeta_cross_check", "class_number_agreement", "horoball_packing"] {
        assert!(names.contains(&expected), "{expected} missing from {names:?}");
    }
}

#[test]
fn errors_are_one_json_line() {
    for (args, kind) in [
        (&["count", "--field", "d=12"][..], "invalid_field"),
        (&["poincare", "--field", "d=1"][..], "missing_s"),
        (&["count", "--cutoffs", "5,3"][..], "invalid_cutoffs"),
        (&["count", "--output", "/nonexistent-dir/out.json"][..], "unwritable_output"),
        (&["frobnicate"][..], "invalid_arguments"),
    ] {
        let out = horocount(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{err}");
        let v: Value = serde_json::from_str(err.trim_end()).unwrap();
        assert_eq!(v["error"], kind, "{args:?}");
    }
}

#[test]
fn output_is_byte_reproducible_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    for (i, args) in RUNS.iter().enumerate() {
        let mut files = Vec::new();
        for threads in ["1", "4"] {
            for format in ["json", "csv"] {
                let path = dir.path().join(format!("{i}-{threads}.{format}"));
                let mut full: Vec<&str> = args.to_vec();
                let p = path.to_str().unwrap();
                full.extend(["--threads", threads, "--format", format, "--output", p]);
                assert!(horocount(&full).status.success(), "{full:?}");
                files.push((format, std::fs::read(&path).unwrap()));
            }
        }
        assert_eq!(files[0], files[2], "json differs between thread counts for {args:?}");
        assert_eq!(files[1], files[3], "csv differs between thread counts for {args:?}");
    }
}

#[test]
fn csv_has_fixed_header() {
    let out = horocount(&["depths", "--field", "rational", "--cutoffs", "2,4", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(reader.headers().unwrap(), vec!["x_or_t", "value", "predicted", "ratio"]);
    assert_eq!(reader.records().count(), 2);
}

#[test]
fn thread_count_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_horocount"))
        .args(["count", "--field", "d=2", "--cutoffs", "30"])
        .env("HOROCOUNT_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let bad = Command::new(env!("CARGO_BIN_EXE_horocount"))
        .args(["count"])
        .env("HOROCOUNT_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn tcs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcs")).args(args).env_remove("TCS_THREADS").output().expect("spawn tcs")
}

fn tcs_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcs")).args(args).env(key, val).output().expect("spawn tcs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&raw).expect("schema compiles")
}

fn assert_valid(v: &Value) {
    let s = schema();
    let errors: Vec<String> = s.iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "schema violations: {errors:#?}");
}

fn verdict<'a>(v: &'a Value, name: &str) -> &'a str {
    v["verdicts"].as_array().unwrap().iter().find(|e| e["name"] == name).unwrap_or_else(|| panic!("no verdict {name}"))["verdict"].as_str().unwrap()
}

#[test]
fn every_command_matches_the_schema() {
    let runs: &[&[&str]] = &[
        &["params", "--n", "8", "--r", "2", "--beta", "2"],
        &["params", "--n", "5", "--r", "2", "--beta", "1.5"],
        &["table1", "--samples", "200"],
        &["verify-ground", "--n", "7", "--r", "2", "--beta", "2", "--samples", "200"],
        &["verify-excited", "--n", "6", "--r", "2", "--beta", "1", "--state", "e1", "--q", "1", "--samples", "200"],
        &["verify-excited", "--n", "8", "--r", "3", "--beta", "2.5", "--state", "nondeg-zero", "--samples", "200"],
        &["spectrum", "--n", "6", "--r", "2", "--beta", "1", "--max-degree", "3", "--symmetry"],
        &["count-triples", "--n", "9", "--r", "3", "--enumerate"],
        &["count-triples", "--n", "5", "--r", "3"],
    ];
    for args in runs {
        let out = tcs(args);
        assert!(out.status.code().is_some_and(|c| c <= 1), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let v = json(&out);
        assert_valid(&v);
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn exit_codes() {
    // Consistent parameters pass.
    assert_eq!(tcs(&["params", "--n", "8", "--r", "2", "--beta", "2"]).status.code(), Some(0));
    // The tabulated (9, 3) entry conflicts with the verified value.
    let out = tcs(&["params", "--n", "9", "--r", "3", "--beta", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["E0_reduced"], 57);
    assert_eq!(v["table1_printed"], 30);
    assert_eq!(verdict(&v, "table1 (9,3)"), "conflict");
    // Domain and usage errors.
    for args in [
        &["params", "--n", "2", "--r", "1", "--beta", "1"][..],
        &["params", "--n", "6", "--r", "0", "--beta", "1"],
        &["params", "--n", "6", "--r", "2", "--beta", "0"],
        &["params", "--n", "6"],
        &["verify-excited", "--n", "6", "--r", "2", "--beta", "1"],
        &["spectrum", "--n", "9", "--r", "2", "--beta", "1", "--degree", "2"],
        &["bogus"],
    ] {
        assert_eq!(tcs(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_is_byte_identical_across_runs_and_threads() {
    let base = ["verify-excited", "--n", "7", "--r", "2", "--beta", "2.5", "--state", "en-1", "--samples", "700", "--seed", "11"];
    let one = tcs(&[&base[..], &["--threads", "1"]].concat()).stdout;
    let four = tcs(&[&base[..], &["--threads", "4"]].concat()).stdout;
    let again = tcs(&[&base[..], &["--threads", "4"]].concat()).stdout;
    let seq = tcs(&[&base[..], &["--deterministic"]].concat()).stdout;
    let env = tcs_env(&base, "TCS_THREADS", "3").stdout;
    assert!(!one.is_empty());
    assert_eq!(one, four);
    assert_eq!(four, again);
    assert_eq!(one, env);
    // Sequential reduction differs only in the echoed flag.
    let mut a = serde_json::from_slice::<Value>(&one).unwrap();
    let b = serde_json::from_slice::<Value>(&seq).unwrap();
    a["config"]["deterministic"] = Value::Bool(true);
    assert_eq!(a["config"], b["config"]);
    let (ma, mb) = (a["report"]["energy_mean"].as_f64().unwrap(), b["report"]["energy_mean"].as_f64().unwrap());
    assert!((ma - mb).abs() <= 1e-12 * ma.abs());
}

#[test]
fn different_seeds_sample_differently() {
    let a = json(&tcs(&["verify-ground", "--n", "6", "--r", "2", "--beta", "2", "--samples", "100", "--seed", "1"]));
    let b = json(&tcs(&["verify-ground", "--n", "6", "--r", "2", "--beta", "2", "--samples", "100", "--seed", "2"]));
    assert_ne!(a["report"]["max_abs_dev"], b["report"]["max_abs_dev"]);
    assert_eq!(verdict(&a, "ground eigenstate"), "pass");
}

#[test]
fn csv_output() {
    let out = tcs(&["count-triples", "--n", "8", "--r", "3", "--output", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let mut rd = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(rd.headers().unwrap().iter().collect::<Vec<_>>(), ["N", "r", "regime", "k", "formula", "enumerated"]);
    let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(&rows[0][4], &rows[0][5]);

    let out = tcs(&["table1", "--samples", "100", "--output", "csv"]);
    let mut rd = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 6);
    let last = &rows[5];
    assert_eq!((&last[0], &last[1], &last[3], &last[4], &last[5]), ("9", "3", "30", "57", "conflict"));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = ["params", "--n", "6", "--r", "1", "--beta", "3", "--out", path.to_str().unwrap()];
    let out = tcs(&args);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_valid(&v);
    assert_eq!(v["E0_reduced"], 6);
    let stdout = json(&tcs(&args[..7]));
    assert_eq!(stdout, v);
}

#[test]
fn count_triples_needs_no_coupling() {
    let v = json(&tcs(&["count-triples", "--n", "7", "--r", "2", "--enumerate"]));
    assert_eq!(v["formula"], 21);
    let triples = v["triples"].as_array().unwrap();
    assert_eq!(triples.len(), 21);
    for t in triples {
        let t: Vec<u64> = t.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        assert!(t.iter().all(|&i| (1..=7).contains(&i)));
    }
}

#[test]
fn excited_report_flags_published_conventions() {
    let v = json(&tcs(&["verify-excited", "--n", "6", "--r", "2", "--beta", "1", "--state", "e1", "--q", "1", "--samples", "300"]));
    assert_eq!(v["units"]["matches"], "2*pi^2/L^2");
    assert_eq!(v["units"]["published_agrees"], false);
    assert_eq!(v["boost"]["oracle_matches"], "2qd+Nq^2");
    assert_eq!(v["boost"]["exact_matches"], "2qd+Nq^2");
    assert_eq!(v["parity_partner"]["degenerate"], true);
}

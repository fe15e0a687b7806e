use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde::{Deserialize, Serialize};
use serde_json::Value;

fn run_in(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubiccm"))
        .args(args)
        .env("CUBICCM_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), args)
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(&run(args))).unwrap()
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares against the stored file; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, args: &[&str]) {
    let got = stdout(&run(args));
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want =
        std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {name}"));
    assert_eq!(got, want, "golden mismatch for {name}");
}

#[test]
fn golden_outputs() {
    golden(
        "hecke_qexp_d7.json",
        &["hecke", "qexp", "--D", "7", "--limit", "4"],
    );
    golden(
        "field_split_d7_p3.json",
        &["field", "split", "--D", "7", "--p", "3"],
    );
    golden(
        "forms_classes_15.json",
        &["forms", "classes", "--det", "15"],
    );
    golden(
        "forms_endo_order11.json",
        &["forms", "endo", "--gram", "[[-22,11],[11,-22]]"],
    );
    golden(
        "frob_table_d4.csv",
        &[
            "frob", "table", "--D", "4", "--pmax", "13", "--format", "csv",
        ],
    );
    golden("fixtures_run_klein.json", &["fixtures", "run", "klein"]);
    golden(
        "lattice_invariants_l.json",
        &["lattice", "invariants", "--name", "L"],
    );
}

#[test]
fn documented_examples() {
    let q = json(&["hecke", "qexp", "--D", "7", "--limit", "4"]);
    assert_eq!(
        q["results"]["coefficients"],
        serde_json::json!([1, -3, 0, 5])
    );
    let s = json(&["field", "split", "--D", "7", "--p", "3"]);
    assert_eq!(s["results"]["splitting"], "inert");
    let c = json(&["forms", "classes", "--det", "15"]);
    assert_eq!(c["results"]["classes"].as_array().unwrap().len(), 2);
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    command: String,
    inputs: Value,
    results: Value,
    notes: Vec<String>,
    version: String,
}

#[test]
fn envelope_schema_and_round_trip() {
    for args in [
        &["hecke", "qexp", "--D", "4", "--limit", "30"][..],
        &["lattice", "complement", "--name", "L0"],
        &["embed", "trace-form", "--d", "20"],
        &[
            "levels",
            "order",
            "--gram",
            "[[1,0,0],[0,1,0],[0,0,1]]",
            "--modulus",
            "3",
        ],
        &["fixtures", "list"],
    ] {
        let text = stdout(&run(args));
        let v: Value = serde_json::from_str(&text).unwrap();
        let env: Envelope = serde_json::from_str(&text).unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&env).unwrap() + "\n",
            text,
            "{args:?}"
        );
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        keys.sort();
        assert_eq!(
            keys,
            ["command", "inputs", "notes", "results", "version"],
            "{args:?}"
        );
    }
}

#[test]
fn large_integers_are_strings() {
    let v = json(&["levels", "order", "--name", "L", "--modulus", "5"]);
    let order = &v["results"]["orders"][0];
    assert_eq!(order["method"], "formula");
    let s = order["order"].as_str().expect("decimal string");
    assert!(s.len() > 19 && s.bytes().all(|b| b.is_ascii_digit()));
    assert!(!v["notes"].as_array().unwrap().is_empty());
    let small = json(&[
        "levels",
        "order",
        "--gram",
        "[[1,0],[0,1]]",
        "--modulus",
        "3",
    ]);
    let orders = small["results"]["orders"].as_array().unwrap();
    assert_eq!(orders.len(), 2);
    assert!(orders.iter().all(|o| o["order"] == 4));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["fixtures", "list"]), 0);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["hecke", "qexp", "--D", "7"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["forms", "endo", "--gram", "[[1,2],"]), 2);
    assert_eq!(
        code(&["field", "split", "--D", "7", "--p", "3", "--format", "csv"]),
        2
    );
    assert_eq!(
        code(&["lattice", "invariants", "--name", "L", "--gram", "[[1]]"]),
        2
    );
    assert_eq!(code(&["hecke", "qexp", "--D", "15", "--limit", "4"]), 3);
    assert_eq!(code(&["field", "split", "--D", "7", "--p", "9"]), 3);
    assert_eq!(code(&["fixtures", "run", "quartic"]), 3);
    assert_eq!(
        code(&["lattice", "invariants", "--gram", "[[1,2],[3,4]]"]),
        3
    );
    assert_eq!(
        code(&["levels", "order", "--name", "L", "--modulus", "2"]),
        3
    );
}

#[test]
fn cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["hecke", "qexp", "--D", "3", "--limit", "300"];
    let first = stdout(&run_in(dir.path(), &args));
    let file = dir.path().join("qexp-D3-M9-B300.txt");
    assert!(file.exists());
    let second = stdout(&run_in(dir.path(), &args));
    assert_eq!(first, second);
    let csv_args = [
        "hecke", "qexp", "--D", "3", "--limit", "300", "--format", "csv",
    ];
    let fresh = tempfile::tempdir().unwrap();
    assert_eq!(
        stdout(&run_in(dir.path(), &csv_args)),
        stdout(&run_in(fresh.path(), &csv_args))
    );
    // a damaged entry is recomputed
    std::fs::write(&file, "garbage\n").unwrap();
    assert_eq!(stdout(&run_in(dir.path(), &args)), first);
    // an unwritable cache location is skipped
    let blocked = dir.path().join("not-a-dir");
    std::fs::write(&blocked, "").unwrap();
    assert_eq!(stdout(&run_in(&blocked, &args)), first);
}

#[test]
fn csv_tables() {
    let t = stdout(&run(&[
        "frob", "shift", "--D", "7", "--pmax", "11", "--format", "csv",
    ]));
    let lines: Vec<&str> = t.lines().collect();
    assert_eq!(lines[0], "p,a_p,f_det,rho_trace,rho_det,consistent");
    assert_eq!(lines[1], "2,-3,4,-6,16,true");
    assert_eq!(lines.len(), 5);
    let c = stdout(&run(&[
        "forms", "classes", "--det", "23", "--format", "csv",
    ]));
    assert_eq!(c.lines().count(), 4);
}

#[test]
fn fixtures_all_pass() {
    let list = json(&["fixtures", "list"]);
    for f in list["results"]["fixtures"].as_array().unwrap() {
        let name = f["name"].as_str().unwrap();
        let r = json(&["fixtures", "run", name]);
        assert_eq!(r["results"]["passed"], true, "{name}");
    }
}

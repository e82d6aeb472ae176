use std::path::Path;
use std::process::{Command, Output};

use ellipfn::integrals::ellip_k;

fn ellipfn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellipfn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8")
}

#[test]
fn eval_prints_round_trip_digits() {
    let o = ellipfn(&["eval", "melK", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1.5707963267948966");

    let o = ellipfn(&["eval", "jsn", "0.23", "0.999"]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert_eq!(format!("{v:.6}"), "0.226032");
}

#[test]
fn eval_accepts_negative_arguments() {
    let o = ellipfn(&["eval", "mpelF", "-0.5", "-3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!(v < 0.0);
}

#[test]
fn out_of_domain_is_nan_not_an_error() {
    let o = ellipfn(&["eval", "melK", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "nan");
    let o = ellipfn(&["eval", "melK", "1"]);
    assert_eq!(stdout(&o).trim(), "inf");
}

#[test]
fn unknown_function_is_a_usage_error() {
    let o = ellipfn(&["eval", "melKK", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(
        e.contains("melKK") && e.contains("did you mean") && e.contains("melK"),
        "{e}"
    );
}

#[test]
fn wrong_arity_is_a_usage_error() {
    let o = ellipfn(&["eval", "melK", "0.1", "0.2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("takes 1 argument,"));
}

#[test]
fn json_and_csv_output() {
    let o = ellipfn(&["eval", "melK", "0.5", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["function"], "melK");
    assert_eq!(doc["value"].as_f64().unwrap(), ellip_k(0.5));

    // non-finite values have no JSON number; they come back as strings
    let o = ellipfn(&["eval", "melK", "1", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["value"], "inf");

    let o = ellipfn(&["eval", "melK", "0.5", "--csv"]);
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(
        r.headers().unwrap().iter().collect::<Vec<_>>(),
        ["function", "a1", "value"]
    );
    let rec = r.records().next().unwrap().unwrap();
    assert_eq!(rec[2].parse::<f64>().unwrap(), ellip_k(0.5));
}

#[test]
fn table_csv_round_trips_bitwise() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.csv");
    let o = ellipfn(&[
        "table",
        "melK",
        "--range",
        "-3:0.99:37",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let mut r = csv::Reader::from_path(&path).unwrap();
    let mut n = 0;
    for rec in r.records() {
        let rec = rec.unwrap();
        let m: f64 = rec[0].parse().unwrap();
        let k: f64 = rec[1].parse().unwrap();
        assert_eq!(k.to_bits(), ellip_k(m).to_bits(), "m = {m}");
        n += 1;
    }
    assert_eq!(n, 37);
}

#[test]
fn table_takes_a_grid_per_argument() {
    let o = ellipfn(&["table", "mpelF", "--range", "0:1:3", "--range", "-1:0.5:4"]);
    assert!(o.status.success());
    let rows = stdout(&o).lines().count();
    assert_eq!(rows, 1 + 3 * 4);
}

#[test]
fn table_rejects_bad_ranges() {
    let o = ellipfn(&["table", "melK", "--range", "0:1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ellipfn(&["table", "melK", "--range", "0:1:0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn elastica_writes_one_curve_per_modulus() {
    let o = ellipfn(&["elastica", "--k", "0.2,0.7", "--samples", "11"]);
    assert!(o.status.success());
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(
        r.headers().unwrap().iter().collect::<Vec<_>>(),
        ["k", "s", "x", "y", "phi"]
    );
    let recs: Vec<Vec<f64>> = r
        .records()
        .map(|x| x.unwrap().iter().map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(recs.len(), 22);
    for start in [&recs[0], &recs[11]] {
        assert_eq!((start[1], start[2], start[3]), (0.0, 0.0, 0.0));
    }
    assert!(recs.iter().all(|r| r.iter().all(|v| v.is_finite())));
}

#[test]
fn elastica_rejects_moduli_outside_the_unit_interval() {
    let o = ellipfn(&["elastica", "--k", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cantilever_reports_the_closed_form_length() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("beam.csv");
    let o = ellipfn(&["cantilever", "--psi1-deg", "60", "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let l: f64 = out
        .lines()
        .find_map(|l| l.strip_prefix("L = "))
        .expect("L line")
        .parse()
        .unwrap();
    assert!((l - 0.885_147_817_312_043_6).abs() < 1e-14, "{out}");
    assert!(Path::new(&path).exists());
    let mut r = csv::Reader::from_path(&path).unwrap();
    let first = r.records().next().unwrap().unwrap();
    assert_eq!((&first[1], &first[2]), ("0", "0"));
}

#[test]
fn cantilever_length_is_nan_with_shear() {
    let o = ellipfn(&["cantilever", "--nu", "-1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("L = nan"));
}

#[test]
fn selftest_flags_only_the_unattainable_length() {
    let o = ellipfn(&["selftest"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().filter(|l| l.starts_with("criterion")).collect();
    assert_eq!(lines.len(), 10);
    for l in &lines {
        let six = l.starts_with("criterion  6 ");
        assert_eq!(l.contains(" FAIL "), six, "{l}");
    }
}

#[test]
fn selftest_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let o = ellipfn(&["selftest", "--report", path.to_str().unwrap()]);
    assert!(o.status.code().is_some());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("func,min(a1),max(a1)"));
    assert_eq!(lines.count(), 3);
}

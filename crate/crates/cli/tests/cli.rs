use std::process::Command;

use serde_json::Value;

use hilbcount::algebra::LaurentPoly;
use hilbcount::census::{poly_a, poly_b, poly_bcirc, poly_c, poly_p};
use hilbcount::identities::gf_c;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn hilbcount(args: &[&str]) -> Run {
    hilbcount_env(args, &[])
}

fn hilbcount_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hilbcount"));
    cmd.args(args).env_remove("HILBCOUNT_WORK_LIMIT");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let run = hilbcount(args);
    assert_eq!(run.code, 0, "{args:?}: {}", run.stderr);
    serde_json::from_str(&run.stdout).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(hilbcount(&["poly", "P", "1"]).code, 0);
    assert_eq!(hilbcount(&["poly", "Q", "1"]).code, 2);
    assert_eq!(hilbcount(&["poly", "C", "0"]).code, 2);
    assert_eq!(hilbcount(&["table", "8"]).code, 2);
    assert_eq!(hilbcount(&["values", "--d", "5"]).code, 2);
    assert_eq!(hilbcount(&["frobnicate"]).code, 2);
    assert_eq!(hilbcount(&["oracle", "--kind", "matrix", "--n", "3", "--q", "3"]).code, 3);
    assert_eq!(hilbcount(&["verify", "zeta", "--n", "2", "--inject-fault", "coeff-c-sign"]).code, 1);
}

#[test]
fn work_limit_comes_from_the_environment() {
    let args = ["oracle", "--kind", "cell", "--lambda", "2,1", "--q", "2"];
    assert_eq!(hilbcount(&args).code, 0);
    let refused = hilbcount_env(&args, &[("HILBCOUNT_WORK_LIMIT", "10")]);
    assert_eq!(refused.code, 3);
    assert!(refused.stderr.contains("work bound"));
    assert_eq!(hilbcount_env(&args, &[("HILBCOUNT_WORK_LIMIT", "lots")]).code, 2);
}

#[test]
fn poly_json_round_trips() {
    for n in 1..=9u32 {
        let cases = [
            ("A", poly_a(n).unwrap()),
            ("B", poly_b(n).unwrap()),
            ("Bcirc", poly_bcirc(n).unwrap()),
            ("C", poly_c(n).unwrap()),
            ("P", poly_p(n).unwrap()),
        ];
        for (which, expected) in cases {
            let v = json(&["poly", which, &n.to_string(), "--format", "json"]);
            assert_eq!(LaurentPoly::from_json(&v["poly"]).unwrap(), expected, "{which}_{n}");
            assert_eq!(v["display"], Value::from(expected.display_in("q")));
        }
    }
}

#[test]
fn poly_companion_values() {
    let p10 = json(&["poly", "P", "10", "--format", "json"]);
    assert_eq!(p10["values"]["at_1"], Value::from(18));
    assert_eq!(p10["values"]["at_-1"], Value::from(2));
    assert_eq!(p10["values"]["a_n0"], Value::from(0));
    let b = hilbcount(&["poly", "bcirc", "12"]);
    assert!(b.stdout.starts_with("B°_12(q) = q^11 + "));
    assert!(b.stdout.contains("- q^3 - q^2 + 1\n"));
    assert_eq!(hilbcount(&["poly", "P", "1"]).stdout.lines().next(), Some("P_1(q) = 1"));
}

#[test]
fn gf_coefficients_round_trip() {
    let v = json(&["gf", "c", "--order", "6", "--format", "json"]);
    let coeffs = v["series"]["C"]["coeffs"].as_array().unwrap();
    let expected = gf_c(6).unwrap();
    assert_eq!(coeffs.len(), 7);
    for (k, c) in coeffs.iter().enumerate() {
        assert_eq!(&LaurentPoly::from_json(c).unwrap(), expected.coeff(k));
    }
    let root = json(&["gf", "root", "--d", "4", "--order", "4", "--format", "json"]);
    assert_eq!(root["series"]["a_d"]["coeffs"], serde_json::json!([1, -2, -2, 4, 2]));
    assert_eq!(hilbcount(&["gf", "rect", "--order", "4"]).code, 2);
}

#[test]
fn json_is_byte_stable() {
    for args in [
        &["table", "2", "--format", "json"][..],
        &["zeta", "6", "--format", "json"],
        &["poly", "A", "11", "--format", "json"],
        &["verify", "series", "--order", "8", "--format", "json"],
        &["sections", "--k", "4", "--format", "json"],
    ] {
        assert_eq!(hilbcount(args).stdout, hilbcount(args).stdout, "{args:?}");
    }
}

#[test]
fn csv_tables() {
    let csv = hilbcount(&["table", "1", "--max-n", "2", "--format", "csv"]).stdout;
    assert_eq!(csv, "n,C_n(q),C_n(-1)\n1,q^2 - 2q + 1,4\n2,q^4 - q^3 - q + 1,4\n");
    let sections = hilbcount(&["sections", "--k", "2", "--max-n", "3", "--format", "csv"]).stdout;
    assert_eq!(sections, "n,s_2(n)\n1,1\n2,2\n3,2\n");
}

#[test]
fn values_and_sections_agree_with_tables() {
    let table6 = json(&["table", "6", "--format", "json"]);
    let values = json(&["values", "--d", "6", "--max-n", "18", "--format", "json"]);
    let row = table6["rows"].as_array().unwrap().iter().find(|r| r["row"] == "|a_6(n)|").unwrap();
    for v in values["rows"].as_array().unwrap() {
        assert_eq!(row[v["n"].to_string()], v["abs"]);
    }
    let table7 = json(&["table", "7", "--format", "json"]);
    let sections = json(&["sections", "--k", "3", "--max-n", "18", "--format", "json"]);
    let row = table7["rows"].as_array().unwrap().iter().find(|r| r["row"] == "s_3(n)").unwrap();
    for v in sections["rows"].as_array().unwrap() {
        assert_eq!(row[v["n"].to_string()], v["value"]);
    }
}

#[test]
fn zeta_evaluation_and_poles() {
    let v = json(&["zeta", "1", "--q", "2", "--t", "3", "--format", "json"]);
    assert_eq!(v["evaluation"]["value"], "25/22");
    let pole = hilbcount(&["zeta", "1", "--q", "2", "--t", "1"]);
    assert_ne!(pole.code, 0);
    assert!(pole.stderr.contains("pole"));
    assert_eq!(hilbcount(&["zeta", "2", "--q", "3"]).code, 2);
    let negative = hilbcount(&["zeta", "2", "--q", "3", "--t", "-1/9"]);
    assert_eq!(negative.code, 0, "{}", negative.stderr);
}

#[test]
fn oracle_examples() {
    let count = |args: &[&str]| {
        let v = json(args);
        assert_eq!(v["match"], Value::from(true), "{args:?}");
        v["count"].clone()
    };
    assert_eq!(count(&["oracle", "--kind", "coprime", "--n", "1", "--q", "2"]), Value::from(1));
    assert_eq!(count(&["oracle", "--kind", "coprime", "--n", "1", "--q", "3"]), Value::from(4));
    assert_eq!(
        count(&["oracle", "--kind", "coprime", "--n", "1", "--q", "2", "--qpoly", "1,1", "--qpoly", "1"]),
        Value::from(2)
    );
    assert_eq!(count(&["oracle", "--kind", "cell", "--lambda", "1", "--q", "2", "--flavor", "invertible"]), Value::from(1));
    assert_eq!(
        count(&["oracle", "--kind", "cell", "--lambda", "1,1", "--q", "2", "--flavor", "invertible", "--route", "minors"]),
        Value::from(5)
    );
    assert_eq!(count(&["oracle", "--kind", "cell", "--lambda", "2,1", "--q", "3"]), Value::from(3u64.pow(5)));
    assert_eq!(count(&["oracle", "--kind", "matrix", "--n", "1", "--q", "2"]), Value::from(4));
    assert_eq!(count(&["oracle", "--kind", "matrix", "--n", "1", "--q", "2", "--flavor", "invertible"]), Value::from(1));
    assert_eq!(count(&["oracle", "--kind", "matrix", "--n", "2", "--q", "2"]), Value::from(24));
    let non_coprime = hilbcount(&["oracle", "--kind", "coprime", "--n", "1", "--q", "2", "--qpoly", "0,1", "--qpoly", "0,1"]);
    assert_eq!(non_coprime.code, 2);
}

#[test]
fn verify_reports_one_line_per_check() {
    let run = hilbcount(&["verify", "zeta", "--n", "3", "--q", "2"]);
    assert_eq!(run.code, 0);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert!(lines[..lines.len() - 1].iter().all(|l| l.starts_with("PASS zeta: ")));
    assert!(lines.last().unwrap().ends_with("0 failed: PASS"));
    let other_seed = hilbcount(&["verify", "zeta", "--n", "4", "--seed", "7", "--samples", "10"]);
    assert_eq!(other_seed.code, 0);
    assert!(other_seed.stdout.contains("10 samples, n <= 4, seed 7"));
}

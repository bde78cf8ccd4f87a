use std::process::{Command, Output};

use nearfield::verify::dn54;
use serde_json::Value;

fn nearfield(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nearfield")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn pairs_listing() {
    let out = nearfield(&["pairs", "--max-p", "7", "--max-l", "1", "--max-n", "9"]);
    assert!(out.status.success());
    let pairs: Vec<(u64, u64)> = json(&out)["payload"]["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p["q"].as_u64().unwrap(), p["n"].as_u64().unwrap()))
        .collect();
    for want in [(3, 2), (5, 4), (7, 9), (5, 8)] {
        assert!(pairs.contains(&want), "{want:?} missing");
    }
    assert!(!pairs.contains(&(4, 3)));
    assert!(!pairs.contains(&(3, 4)));

    let out = nearfield(&["pairs", "--max-p", "7", "--max-l", "2", "--max-n", "9"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"q\": 4"));
}

#[test]
fn dset_in_dn54() {
    let out = nearfield(&[
        "dset",
        "--q",
        "5",
        "--n",
        "4",
        "--modulus",
        "x^4+2",
        "--generator",
        "x+2",
        "--alpha",
        "3",
        "--beta",
        "x^2+2",
    ]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["command"], "dset");
    assert_eq!(report["status"], "ok");
    assert_eq!(report["context"]["generator"], "1*x+2");
    assert!(report["payload"]["classification"].as_str().unwrap().starts_with("SUBFIELD"));
}

#[test]
fn rdim_of_two_vectors_in_r5() {
    let out = nearfield(&["rdim", "--q", "3", "--n", "2", "--vectors", "1;2*x+2;x;0;x|2;2*x;1;2;x"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["payload"]["r_dim"], 5);
}

#[test]
fn emitted_elements_parse_back() {
    let out = nearfield(&[
        "nf-mul",
        "--q",
        "5",
        "--n",
        "4",
        "--modulus",
        "x^4+2",
        "--generator",
        "x+2",
        "--a",
        "x+2",
        "--b",
        "2,0,3,1",
    ]);
    let r = dn54();
    let f = r.field();
    let shown = json(&out)["payload"]["result"].as_str().unwrap().to_string();
    let expected = r.nf_mul(&f.parse("x+2").unwrap(), &f.parse("x^3+3*x^2+2").unwrap());
    assert_eq!(f.parse(&shown).unwrap(), expected);
    assert_eq!(f.format(&expected), shown);
}

#[test]
fn coset_and_inverse() {
    let base = ["--q", "5", "--n", "4", "--modulus", "x^4+2", "--generator", "x+2"];
    let out = nearfield(&[&["coset", "--a", "x^2+1"], &base[..]].concat());
    assert_eq!(json(&out)["payload"]["k"], 2);
    let out = nearfield(&[&["nf-inv", "--a", "x+2"], &base[..]].concat());
    let inv = json(&out)["payload"]["result"].as_str().unwrap().to_string();
    let r = dn54();
    let f = r.field();
    assert_eq!(r.nf_mul(&f.parse("x+2").unwrap(), &f.parse(&inv).unwrap()), f.one());
}

#[test]
fn sweep_csv_is_reproducible() {
    let args = ["dset-sweep", "--q", "5", "--n", "4", "--samples", "300", "--seed", "9", "--csv"];
    let a = nearfield(&args);
    let b = nearfield(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("r,s,t,dim_p,classification,count\n"));
    assert!(!text.contains("NOT_SUBFIELD"));
}

#[test]
fn exhaustive_sweep_guard() {
    let out = nearfield(&["dset-sweep", "--q", "7", "--n", "9", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["status"]["error"]["code"], "TooLarge");
}

#[test]
fn seed_construct_bounds() {
    let out = nearfield(&["seed-construct", "--q", "3", "--n", "2", "--m", "10"]);
    assert_eq!(json(&out)["payload"]["r_dim"], 10);
    let out = nearfield(&["seed-construct", "--q", "3", "--n", "2", "--m", "11"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["status"]["error"]["code"], "OutOfRange");
}

#[test]
fn exit_codes() {
    // domain errors
    assert_eq!(nearfield(&["field-info", "--q", "3", "--n", "4"]).status.code(), Some(1));
    assert_eq!(nearfield(&["nf-inv", "--q", "3", "--n", "2", "--a", "0"]).status.code(), Some(1));
    let out = nearfield(&["field-info", "--q", "5", "--n", "4", "--modulus", "x^4+1"]);
    assert_eq!(out.status.code(), Some(1));
    // usage errors name the flag
    let out = nearfield(&["nf-mul", "--q", "3", "--n", "2", "--a", "x+", "--b", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--a"));
    let out = nearfield(&["dset", "--q", "3", "--n", "2", "--alpha", "1", "--beta", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--beta"));
    assert_eq!(nearfield(&["rdim", "--q", "3"]).status.code(), Some(2));
    assert_eq!(nearfield(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(nearfield(&["verify-paper", "--check", "99"]).status.code(), Some(2));
}

#[test]
fn verify_subset() {
    let out = nearfield(&["verify-paper", "--check", "2", "--check", "7", "--check", "9"]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["payload"]["passed"], 3);
    assert!(String::from_utf8(out.stderr).unwrap().contains("[PASS]"));
}

#[test]
fn table_output() {
    let out = nearfield(&["--table", "gen", "--q", "3", "--n", "2", "--vectors", "1;1;0|1;0;1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dim: 3"));
}

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn stopset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stopset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = stopset(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn matrix_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn verify_table1_succeeds() {
    let v = json(&["verify-table1"]);
    assert_eq!(v["all_match"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 12);
    assert_eq!(v["entries"][0]["computed"]["polynomial"], "1+14x^4+x^8");
}

#[test]
fn enumerate_reads_a_matrix_file() {
    let f = matrix_file("# H4\n8 4\n10101010\n01010101\n00110011\n00001111\n");
    let v = json(&["enumerate", "--matrix", f.path().to_str().unwrap(), "--optimal"]);
    assert_eq!(v["profile"]["stopping"]["polynomial"], "1+2x^3+24x^4+40x^5+28x^6+8x^7+x^8");
    assert_eq!(v["profile"]["stopping_distance"], 3);
    assert_eq!(v["code"]["d"], 4);
    assert_eq!(v["optimal"]["stopping"]["polynomial"], "1+14x^4+28x^6+8x^7+x^8");
    assert_eq!(v["optimal"]["dead_end"]["coefficients"][4], "14");
}

#[test]
fn enumerate_rejects_a_foreign_matrix() {
    let out = stopset(&["enumerate", "--matrix", "H4", "--code", "hamming"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ragged_matrix_file_is_an_input_error() {
    let f = matrix_file("1100\n111\n");
    let out = stopset(&["enumerate", "--matrix", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn decode_reports_both_decoders() {
    let v = json(&["decode", "--matrix", "H8", "--word", "???0011?"]);
    assert_eq!(v["iterative"]["kind"], "decoded");
    assert_eq!(v["optimal"]["codeword"], "01100110");

    // {3,5,7} is a stopping set of H4 but not a codeword support
    let v = json(&["decode", "--matrix", "H4", "--word", "00?0?0?0"]);
    assert_eq!(v["iterative"]["kind"], "stalled");
    assert_eq!(v["optimal"]["kind"], "decoded");
}

#[test]
fn decode_flags_inconsistent_words() {
    let out = stopset(&["decode", "--matrix", "H4", "--word", "10000000"]);
    assert_eq!(out.status.code(), Some(2));
    let out = stopset(&["decode", "--matrix", "H4", "--word", "01x00000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn simulate_is_reproducible() {
    let args = [
        "simulate", "--code", "rm", "--matrix", "H8", "--epsilon", "0.3", "--trials", "3000",
        "--seed", "7",
    ];
    let a = json(&args);
    let b = json(&args);
    assert_eq!(a, b);
    assert_eq!(a["event_mismatches"], 0);
    assert_eq!(a["wrong_decodes"], 0);
}

#[test]
fn simulate_rejects_bad_epsilon() {
    let out = stopset(&["simulate", "--code", "rm", "--matrix", "H8", "--epsilon", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_outputs() {
    let v = json(&["construct", "low-weight", "--code", "rm", "--weight", "4"]);
    assert_eq!(v["matrix"]["rows"].as_array().unwrap().len(), 14);

    let v = json(&["construct", "bad", "--code", "rm"]);
    assert_eq!(v["profile"]["stopping_distance"], 3);
    assert_eq!(v["codeword"], "11110000");

    let out = stopset(&["construct", "search", "--code", "rm", "--predicate", "D=I", "--text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("8 6\n"), "{text}");

    let out = stopset(&["construct", "bad", "--code", "hamming"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_text_round_trips_through_enumerate() {
    let out = stopset(&["construct", "complete", "--code", "rm", "--text"]);
    assert!(out.status.success());
    let f = matrix_file(&String::from_utf8(out.stdout).unwrap());
    let v = json(&["enumerate", "--matrix", f.path().to_str().unwrap(), "--code", "rm"]);
    assert_eq!(v["profile"]["stopping"]["polynomial"], "1+14x^4+28x^6+8x^7+x^8");
}

#[test]
fn bounds_for_reed_muller() {
    let v = json(&["bounds", "--n", "8", "--k", "4", "--d", "4"]);
    assert_eq!(v["sv_bound"]["value"], 10);
    assert_eq!(v["hs_bound"]["value"], 8);
    assert_eq!(v["holtol_bound"]["value"], 8);
    assert!(v["entropy_bound"]["value"].is_null());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(stopset(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(stopset(&["bounds", "--n", "8"]).status.code(), Some(2));
    assert_eq!(stopset(&["enumerate", "--matrix", "no_such_thing"]).status.code(), Some(2));
}

#[test]
fn enumeration_guard_can_be_lowered() {
    let out = Command::new(env!("CARGO_BIN_EXE_stopset"))
        .args(["enumerate", "--matrix", "H4"])
        .env("STOPSET_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard"));
}

#[test]
fn pretty_output_is_not_json() {
    let out = stopset(&["--pretty", "enumerate", "--matrix", "H14"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("S(x) = 1+14x^4+28x^6+8x^7+x^8"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

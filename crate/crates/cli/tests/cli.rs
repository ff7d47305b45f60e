use std::process::{Command, Output};

use htorelli::{Factorization, LaurentMatrix, Word};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_htorelli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn epsilon_of_two_letters() {
    assert_eq!(stdout(&["word", "eps", "-g", "1", "z1 z2"]), "e1 - e2\n");
    let v = json(&["word", "eps", "-g", "1", "z1 z2"]);
    assert_eq!(v["result"], serde_json::json!([1, -1, 0]));
    assert_eq!(v["inputs"]["word"], "z1 z2");
}

#[test]
fn full_twist_is_not_in_k3() {
    assert_eq!(
        stdout(&["braid", "kernel", "-n", "3", "s1 s2 s1 s2 s1 s2"]),
        "false (image = -I)\n"
    );
    assert_eq!(
        stdout(&[
            "braid",
            "kernel",
            "-n",
            "3",
            "s1 s2 s1 s2 s1 s2 s1 s2 s1 s2 s1 s2"
        ]),
        "true\n"
    );
    assert!(stdout(&["braid", "kernel", "-n", "3", "s1"]).starts_with("false (not pure"));
}

#[test]
fn square_factors_as_one_entry() {
    let v = json(&["word", "factor", "-g", "1", "z1 z1"]);
    let factors = v["result"]["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 1);
    assert_eq!(factors[0]["gen"], "sq:1");
    assert_eq!(factors[0]["conj"], "");
    assert_eq!(factors[0]["exp"], 1);
    assert_eq!(v["result"]["verified"], true);
    assert!(stdout(&["word", "factor", "-g", "1", "z1 z1"]).ends_with("verified: true\n"));
}

#[test]
fn factorization_json_parses_back() {
    let word = "z2 z3 z1 z2^-1 z3^-1 z1^-1 z1 z1";
    let v = json(&["word", "factor", "-g", "2", word]);
    let f = Factorization::from_json(&v["result"]["factors"], 5).unwrap();
    let w = Word::parse(word, 5).unwrap();
    assert_eq!(f.expand().unwrap(), w);
}

#[test]
fn burau_json_parses_back() {
    let v = json(&["braid", "burau", "-n", "4", "s1 s2^-1 s3"]);
    let m = LaurentMatrix::from_json(&v["result"]).unwrap();
    assert_eq!(m.dim(), 3);
    let at = json(&["braid", "eval", "-n", "4", "s1 s2^-1 s3"]);
    assert_eq!(m.evaluate_at(-1).unwrap().to_json(), at["result"]);
    let at_one = json(&["braid", "eval", "-n", "4", "--at", "1", "s1"]);
    assert_eq!(at_one["inputs"]["at"], 1);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["word", "eps", "-g", "1", "z1"]), 1);
    assert_eq!(code(&["word", "factor", "-g", "1", "z1 z2"]), 1);
    assert_eq!(code(&["word", "eps", "-g", "1", "z4"]), 2);
    assert_eq!(code(&["word", "eps", "-g", "1", "x1"]), 2);
    assert_eq!(code(&["word", "eps", "z1"]), 2);
    assert_eq!(code(&["word", "eps", "-g", "0", "z1"]), 2);
    assert_eq!(code(&["word", "frobnicate"]), 2);
    assert_eq!(code(&["braid", "eval", "-n", "3", "--at", "2", "s1"]), 2);
    let out = run(&["word", "eps", "-g", "1", "z1"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd"));
}

#[test]
fn identity_display_alias() {
    assert_eq!(
        stdout(&["word", "reduce", "-g", "1", "z1 z2 z2^-1 z1^-1"]),
        "<id>\n"
    );
    assert_eq!(
        json(&["word", "reduce", "-g", "1", "z1 z1^-1"])["result"],
        ""
    );
    assert_eq!(
        run(&["word", "reduce", "-g", "1", "<id>"]).status.code(),
        Some(2)
    );
}

#[test]
fn split_and_kernel() {
    let v = json(&["word", "split", "-g", "1", "z2 z1"]);
    assert_eq!(v["result"]["kernel"], "");
    assert_eq!(v["result"]["epsilon"], serde_json::json!([-1, 1, 0]));
    assert_eq!(v["result"]["pairs"], serde_json::json!([[2, 1]]));
    assert_eq!(stdout(&["word", "kernel", "-g", "1", "z1 z1"]), "true\n");
    assert_eq!(
        stdout(&["word", "kernel", "-g", "1", "z1 z2"]),
        "false (epsilon = e1 - e2)\n"
    );
}

#[test]
fn enumeration_and_schreier() {
    let v = json(&["word", "enum", "-n", "1", "--max-len", "2"]);
    assert_eq!(v["result"], serde_json::json!(["", "z1 z1", "z1^-1 z1^-1"]));
    let sizes: Vec<usize> = (0..3)
        .map(|r| {
            json(&["word", "schreier", "-g", "1", "--radius", &r.to_string()])["result"]
                .as_array()
                .unwrap()
                .len()
        })
        .collect();
    assert_eq!(sizes, vec![8, 54, 148]);
}

#[test]
fn action_commands() {
    assert_eq!(
        stdout(&["action", "fix", "-g", "1", "--beta", "3", "z1 z2"]),
        "b3 -> -2b1 + 2b2 + b3\nfixed: false\ntorelli: false\n"
    );
    let v = json(&["action", "matrix", "-g", "1", "z1"]);
    assert_eq!(
        v["result"],
        serde_json::json!([[-1, -2, -2], [0, 1, 0], [0, 0, 1]])
    );
    let v = json(&["action", "fix", "-g", "1", "z1 z1"]);
    assert_eq!(v["result"]["torelli"], true);
}

#[test]
fn braid_helpers() {
    assert_eq!(
        stdout(&["braid", "center", "-n", "3"]),
        "s1 s2 s1 s2 s1 s2\n"
    );
    assert_eq!(
        stdout(&["braid", "center", "-g", "1"]).split(' ').count(),
        12
    );
    assert_eq!(
        stdout(&["braid", "perm", "-n", "3", "s1"]),
        "(1 2)\npure: false\n"
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--json",
        "word",
        "factor",
        "-g",
        "2",
        "z2 z3 z1 z2^-1 z3^-1 z1^-1",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

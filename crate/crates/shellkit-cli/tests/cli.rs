//! End-to-end tests of the `shellkit` binary: golden outputs, exit codes,
//! and byte stability.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_shellkit");

fn run(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(args: &[&str], input: &str) -> String {
    let out = run(args, input);
    assert!(
        out.status.success(),
        "expected success, got {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

const XX: &str = r#"{"n":2,"gens":[[2,0],[1,1]]}"#;
const TWO_PLANES: &str =
    r#"{"n":4,"gens":[[1,0,1,0],[1,0,0,1],[0,1,1,0],[0,1,0,1]]}"#;
const PATH: &str = r#"{"n":3,"facets":[[1,2],[2,3]]}"#;

#[test]
fn facets_text_and_json() {
    assert_eq!(stdout_of(&["facets"], XX), "(0,inf)\n(1,0)\n");
    assert_eq!(
        stdout_of(&["facets", "--format", "json"], XX),
        "{\"facets\":[[0,\"inf\"],[1,0]],\"n\":2}\n"
    );
}

#[test]
fn accepts_multicomplex_and_complex_inputs() {
    // same ideal given as a multicomplex
    let gamma = r#"{"n":2,"maximal":[[0,"inf"],[1,0]]}"#;
    assert_eq!(stdout_of(&["ass"], XX), stdout_of(&["ass"], gamma));
    // a complex feeds its Stanley-Reisner ideal to ideal commands
    assert_eq!(stdout_of(&["ass"], PATH), "(x1)\n(x3)\n");
}

#[test]
fn decomposition_commands() {
    assert_eq!(stdout_of(&["decomp"], XX), "(x1)\n(x2,x1^2)\n");
    assert_eq!(
        stdout_of(&["primary"], XX),
        "(x1) -> (x1)\n(x1,x2) -> (x2,x1^2)\n"
    );
    assert_eq!(stdout_of(&["ass"], XX), "(x1)\n(x1,x2)\n");
    assert_eq!(stdout_of(&["std-pairs"], XX), "(1, {x2})\n(x1, {})\n");
    assert_eq!(stdout_of(&["arithdeg"], XX), "2\n");
    assert_eq!(
        stdout_of(&["arithdeg", "--format", "json"], XX),
        "{\"arithmetic_degree\":2}\n"
    );
}

#[test]
fn invariant_commands() {
    assert_eq!(stdout_of(&["reg"], XX), "1\n");
    assert_eq!(stdout_of(&["depth"], XX), "0\n");
    assert_eq!(
        stdout_of(&["hilbert", "--degree-bound", "4"], XX),
        "t + (1)/(1-t)\nexpansion: [1, 2, 1, 1, 1]\n"
    );
    assert_eq!(
        stdout_of(&["ext-hilbert", "--index", "2", "--degree-bound", "2"], XX),
        "t^-1\nexpansion: [0, 0, 0]\n"
    );
    assert_eq!(stdout_of(&["borel"], XX), "Borel type: yes\n");
    assert_eq!(
        stdout_of(&["stanley"], XX),
        "x1 * K[]\n1 * K[x2]\n"
    );
}

#[test]
fn complex_commands() {
    assert_eq!(
        stdout_of(&["shell-numbers"], PATH),
        "1. {x1,x2}  a = 0  f = 1\n2. {x2,x3}  a = 1  f = x3\n"
    );
    let dress = stdout_of(&["dress"], PATH);
    assert!(dress.starts_with("shelling order: {x1,x2}, {x2,x3}\n"));
    // complex commands refuse other input kinds
    assert_eq!(run(&["shell-numbers"], XX).status.code(), Some(1));
}

#[test]
fn records_round_trip_through_verify() {
    let shelling = stdout_of(&["shelling", "--format", "json"], XX);
    let verdict = run(&["verify"], &shelling);
    assert_eq!(verdict.status.code(), Some(0));

    let filtration = stdout_of(&["filtration", "--format", "json"], XX);
    let verdict = run(&["verify", "--format", "json"], &filtration);
    assert_eq!(verdict.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(verdict.stdout).unwrap(),
        "{\"kind\":\"filtration\",\"valid\":true}\n"
    );

    // tampering flips the verdict to exit code 2
    let tampered = filtration.replace("\"u\":[1,0]", "\"u\":[5,5]");
    assert_ne!(tampered, filtration);
    assert_eq!(run(&["verify"], &tampered).status.code(), Some(2));
}

#[test]
fn negative_verdicts_exit_2() {
    for cmd in ["shelling", "filtration", "depth", "reg", "hilbert", "stanley"] {
        let out = run(&[cmd], TWO_PLANES);
        assert_eq!(out.status.code(), Some(2), "command {}", cmd);
        assert!(String::from_utf8(out.stdout).unwrap().starts_with("no: "));
    }
    let out = run(&["borel"], TWO_PLANES);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["dress"], r#"{"n":4,"facets":[[1,2],[3,4]]}"#);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_input_exits_1() {
    assert_eq!(run(&["ass"], "not json").status.code(), Some(1));
    assert_eq!(run(&["ass"], r#"{"n":2}"#).status.code(), Some(1));
    // 0 is not a valid 1-based vertex label
    assert_eq!(
        run(&["facets"], r#"{"n":2,"facets":[[0]]}"#).status.code(),
        Some(1)
    );
    // unit ideal has no decomposition
    assert_eq!(
        run(&["decomp"], r#"{"n":2,"gens":[[0,0]]}"#).status.code(),
        Some(1)
    );
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["facets", "--format", "json"],
        vec!["shelling", "--format", "json"],
        vec!["filtration", "--format", "json"],
        vec!["hilbert", "--format", "json"],
    ] {
        let a = stdout_of(&args, XX);
        let b = stdout_of(&args, XX);
        assert_eq!(a, b, "args {:?}", args);
    }
}

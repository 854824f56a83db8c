use std::process::{Command, Output};

fn macd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macd")).args(args).output().expect("macd runs")
}

fn stdout_line(args: &[&str]) -> String {
    let out = macd(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn expand_examples() {
    assert_eq!(
        stdout_line(&["expand", "--family", "macdonald", "--partition", "2", "--to", "m", "--format", "plain"]),
        "m[2] + ((1+q)*(1-t)/(1-q*t))*m[1,1]"
    );
    assert_eq!(stdout_line(&["expand", "--family", "hl-q", "--partition", "1", "--to", "p"]), "(1-t)*p[1]");
    assert_eq!(stdout_line(&["expand", "--family", "schur", "--partition", "1,1", "--to", "m"]), "m[1,1]");
}

#[test]
fn apply_examples() {
    assert_eq!(stdout_line(&["apply", "--op", "A", "--k", "1", "--to-expr", "p[1]"]), "((1-q)/q)*p[1]");
    assert_eq!(stdout_line(&["apply", "--op", "C", "--k", "1", "--to-expr", "p[1]"]), "(1-q)");
    assert_eq!(
        stdout_line(&["apply", "--op", "DN", "--N", "1", "--to-expr", "m[2]"]),
        "u^0: m[2], u^1: -(q^2)*m[2]"
    );
}

#[test]
fn json_output_is_valid() {
    let s = stdout_line(&["expand", "--family", "macdonald", "--partition", "1,1", "--to", "p", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert!(v.is_object() || v.is_array());
}

#[test]
fn exit_codes() {
    assert_eq!(macd(&["apply", "--op", "DN", "--to-expr", "m[2]"]).status.code(), Some(3));
    assert_eq!(macd(&["apply", "--op", "A", "--to-expr", "p[1"]).status.code(), Some(2));
    assert_eq!(macd(&["expand", "--family", "schur", "--partition", "x"]).status.code(), Some(2));
    assert_eq!(macd(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(macd(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(macd(&["verify", "steps", "--max-degree", "2"]).status.code(), Some(1));
}

#[test]
fn verify_examples_pass_and_are_deterministic() {
    for args in [
        &["verify", "theorem", "--max-degree", "4", "--max-k", "2"][..],
        &["verify", "proposition", "--N", "3", "--max-weight", "4"],
    ] {
        let first = macd(args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        let text = String::from_utf8(first.stdout.clone()).unwrap();
        let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
        assert_eq!(last["summary"]["failed"], 0);
        assert!(last["summary"]["total"].as_u64().unwrap() > 0);
        assert_eq!(macd(args).stdout, first.stdout);
    }
}

#[test]
fn numeric_mode_needs_a_seed() {
    assert_eq!(macd(&["verify", "deigen", "--mode", "numeric"]).status.code(), Some(2));
    assert_eq!(macd(&["verify", "deigen", "--mode", "numeric", "--seed", "7", "--max-weight", "2"]).status.code(), Some(0));
}

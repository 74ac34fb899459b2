use std::process::Command;

use serde_json::Value;
use uniwalk_cli::{run, EXIT_DOMAIN, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("uniwalk").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json_line(args: &[&str]) -> Value {
    let (code, out, _) = invoke(args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 1);
    serde_json::from_str(out.trim()).unwrap()
}

#[test]
fn scalar_queries() {
    assert_eq!(invoke(&["walks", "4", "2", "0", "0"]), (EXIT_OK, "2\n".into(), String::new()));
    assert_eq!(invoke(&["unit-sums", "8", "3", "0"]).1, "0\n");
    assert_eq!(invoke(&["unit-sums", "5", "2", "0"]).1, "4\n");
    assert_eq!(invoke(&["rad", "360"]).1, "30\n");
    assert_eq!(invoke(&["phi", "12"]).1, "4\n");
    assert_eq!(invoke(&["circ-row", "5", "2"]).1, "4 3 3 3 3\n");
}

#[test]
fn oracle_method_agrees() {
    for args in [
        vec!["walks", "12", "3", "0", "1"],
        vec!["unit-sums", "9", "3", "4"],
        vec!["circ-row", "10", "4"],
        vec!["phi", "36"],
    ] {
        let closed = invoke(&args);
        let mut with_oracle = args.clone();
        with_oracle.extend(["--method", "oracle"]);
        let oracle = invoke(&with_oracle);
        assert_eq!(closed.0, EXIT_OK);
        assert_eq!(closed, oracle, "{args:?}");
    }
}

#[test]
fn json_output_fields() {
    let v = json_line(&["walks", "4", "2", "0", "0", "--json"]);
    assert_eq!(v["value"], "2");
    assert_eq!(v["method"], "closed-form");
    assert_eq!(v["query"]["command"], "walks");
    assert_eq!(v["query"]["n"], 4);
    assert!(v["elapsed_ms"].as_f64().unwrap() >= 0.0);

    let v = json_line(&["--json", "circ-row", "4", "2", "--method", "oracle"]);
    assert_eq!(v["value"], serde_json::json!(["2", "0", "2", "0"]));
    assert_eq!(v["method"], "oracle");
}

#[test]
fn big_counts_print_in_decimal() {
    let (code, out, _) = invoke(&["walks", "963761198400", "1000", "0", "0"]);
    assert_eq!(code, EXIT_OK);
    let digits = out.trim();
    assert!(digits.len() > 10_000);
    assert!(digits.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn deterministic_values() {
    let a = json_line(&["unit-sums", "360", "12", "7", "--json"]);
    let b = json_line(&["unit-sums", "360", "12", "7", "--json"]);
    assert_eq!(a["value"], b["value"]);
}

#[test]
fn domain_errors_exit_one() {
    let (code, out, err) = invoke(&["walks", "1", "2", "0", "0"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(out.is_empty());
    assert!(err.contains("modulus must be at least 2"), "{err}");

    let (code, _, err) = invoke(&["walks", "6", "2", "0", "6"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("j = 6"), "{err}");

    let (code, _, err) = invoke(&["unit-sums", "6", "0", "0"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("k must be at least 1"), "{err}");

    let (code, _, err) = invoke(&["walks", "600", "2", "0", "0", "--method", "oracle"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("oracle size cap 512"), "{err}");

    let (code, _, _) = invoke(&["walks", "50", "2", "0", "1", "--method", "oracle", "--oracle-cap", "40"]);
    assert_eq!(code, EXIT_DOMAIN);

    assert_eq!(invoke(&["rad", "10", "--method", "oracle"]).0, EXIT_DOMAIN);
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        vec![],
        vec!["walks", "4", "2"],
        vec!["walks", "four", "2", "0", "0"],
        vec!["frobnicate"],
        vec!["rad", "10", "--method", "guess"],
    ] {
        let (code, out, err) = invoke(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains("Usage"), "{args:?}: {err}");
    }
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
}

#[test]
fn verify_sweep_passes() {
    let (code, out, err) = invoke(&["verify", "--max-n", "20", "--max-k", "6"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("all comparisons passed"), "{out}");

    let v = json_line(&["verify", "--max-n", "8", "--max-k", "3", "--json"]);
    assert_eq!(v["value"]["passed"], true);
    assert_eq!(v["value"]["mismatches"], 0);
    assert!(v["value"]["first_mismatch"].is_null());
}

#[test]
fn verify_rejects_sweep_beyond_cap() {
    let (code, _, err) = invoke(&["verify", "--max-n", "30", "--max-k", "2", "--oracle-cap", "20"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("size cap 20"), "{err}");
}

#[test]
fn mismatch_exit_code_is_distinct() {
    assert_eq!(EXIT_MISMATCH, 3);
    assert!(![EXIT_OK, EXIT_DOMAIN, EXIT_USAGE].contains(&EXIT_MISMATCH));
}

#[test]
fn binary_exit_codes_and_env_cap() {
    let bin = env!("CARGO_BIN_EXE_uniwalk");
    let out = Command::new(bin).args(["walks", "4", "2", "0", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "2\n");

    let out = Command::new(bin).args(["walks", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(bin)
        .args(["walks", "30", "2", "0", "1", "--method", "oracle"])
        .env("UNIWALK_ORACLE_CAP", "16")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size cap 16"));

    // flag overrides the environment
    let out = Command::new(bin)
        .args(["walks", "30", "2", "0", "1", "--method", "oracle", "--oracle-cap", "64"])
        .env("UNIWALK_ORACLE_CAP", "16")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

//! End-to-end checks of the binary: output contracts, exit codes, JSON
//! shape, zero stripping, the enumeration bound, and determinism.

use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_witt-paths"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn json_record(args: &[&str]) -> (Value, Output) {
    let output = run(args);
    let record: Value =
        serde_json::from_str(stdout(&output).trim()).expect("stdout parses as one JSON record");
    (record, output)
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process exits normally")
}

#[test]
fn count_reports_exact_values() {
    let (record, output) = json_record(&["count", "-m", "2,2", "--json", "--no-timing"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(record["command"], "count");
    assert_eq!(record["status"], "ok");
    let results = &record["results"];
    assert_eq!(results["theta"], "10");
    assert_eq!(results["theta_plus"], "6");
    assert_eq!(results["theta_minus"], "4");
    assert_eq!(results["F"], "12");
    assert_eq!(results["F_prime"], "48");
    assert_eq!(results["G"], "6");
    assert_eq!(results["H"], "7");
    assert_eq!(results["P"], "-1");
    assert_eq!(results["M"], "1");
    assert!(record.get("elapsed_ms").is_none());
}

#[test]
fn count_prints_rationals_exactly() {
    let (record, _) = json_record(&["count", "-m", "3,3", "--json", "--no-timing"]);
    assert_eq!(record["results"]["F"], "172/3");
    assert_eq!(record["results"]["G"], "86/3");
    assert_eq!(record["results"]["theta"], "56");
}

#[test]
fn count_single_edge_skips_undefined_quantities() {
    let (record, output) = json_record(&["count", "-m", "1", "--json", "--no-timing"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(record["results"]["theta"], "2");
    assert_eq!(record["results"]["theta_plus"], "2");
    assert_eq!(record["results"]["theta_minus"], "0");
    assert_eq!(record["results"]["M"], "1");
    assert!(record["results"].get("F").is_none());
}

#[test]
fn count_strips_zero_entries_with_notice() {
    let output = run(&["count", "-m", "2,0,2", "--no-timing"]);
    assert_eq!(exit_code(&output), 0);
    let err = String::from_utf8(output.stderr.clone()).unwrap();
    assert!(err.contains("stripped zero entries"), "stderr: {err}");
    assert!(stdout(&output).contains("theta = 10"));
}

#[test]
fn malformed_multidegrees_are_usage_errors() {
    assert_eq!(exit_code(&run(&["count", "-m", "2,x"])), 2);
    assert_eq!(exit_code(&run(&["count", "-m", "0,0"])), 2);
    assert_eq!(exit_code(&run(&["count", "-m", ""])), 2);
    // clap-level usage problems share the exit code
    assert_eq!(exit_code(&run(&["count"])), 2);
    assert_eq!(exit_code(&run(&["no-such-command"])), 2);
}

#[test]
fn oracle_words_counts_and_lists() {
    let (record, output) = json_record(&[
        "oracle",
        "words",
        "-m",
        "2,2",
        "--list",
        "--json",
        "--no-timing",
    ]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(record["results"]["total_words"], "48");
    assert_eq!(record["results"]["nonperiodic_classes"], "10");
    let classes = record["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 10);
    assert!(classes.iter().any(|c| c == "D1^+2 D2^+2"));
}

#[test]
fn oracle_necklace_counts() {
    let (record, _) = json_record(&["oracle", "necklaces", "-m", "2,2", "--json", "--no-timing"]);
    assert_eq!(record["results"]["nonperiodic_classes"], "1");
    let (record, _) = json_record(&[
        "oracle",
        "signed-necklaces",
        "-m",
        "1,1,1",
        "--json",
        "--no-timing",
    ]);
    assert_eq!(record["results"]["nonperiodic_classes"], "16");
}

#[test]
fn oracle_bound_is_enforced_and_overridable() {
    let refused = run(&["oracle", "necklaces", "-m", "7,7"]);
    assert_eq!(exit_code(&refused), 2);
    let err = String::from_utf8(refused.stderr.clone()).unwrap();
    assert!(err.contains("enumeration"), "stderr: {err}");

    let allowed = run(&[
        "oracle",
        "necklaces",
        "-m",
        "7,7",
        "--max-n",
        "14",
        "--no-timing",
    ]);
    assert_eq!(exit_code(&allowed), 0);
}

#[test]
fn dims_agree_on_both_routes() {
    let (record, output) = json_record(&[
        "dims",
        "--kind",
        "H",
        "-k",
        "2,2,2",
        "--json",
        "--no-timing",
    ]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(record["results"]["dims_faa"], "228");
    assert_eq!(record["results"]["dims_series"], "228");
    assert_eq!(record["results"]["agree"], "true");

    let (record, _) = json_record(&["dims", "--kind", "F", "-k", "1,1", "--json", "--no-timing"]);
    assert_eq!(record["results"]["dims_faa"], "4");
}

#[test]
fn dims_rejects_single_entry() {
    assert_eq!(exit_code(&run(&["dims", "--kind", "H", "-k", "3"])), 2);
}

#[test]
fn verify_passes_and_fails_with_exit_codes() {
    let pass = run(&[
        "verify",
        "sherman",
        "--edges",
        "2",
        "--degree",
        "6",
        "--no-timing",
    ]);
    assert_eq!(exit_code(&pass), 0);
    assert!(stdout(&pass).contains("passed = true"));

    let (record, output) = json_record(&[
        "verify",
        "cancellation",
        "--edges",
        "2",
        "--degree",
        "6",
        "--corrupt",
        "2,2",
        "--json",
        "--no-timing",
    ]);
    assert_eq!(exit_code(&output), 1);
    assert_eq!(record["status"], "fail");
    assert_eq!(record["mismatch"]["exponents"], serde_json::json!([2, 2]));
}

#[test]
fn verify_covers_all_identities() {
    for args in [
        vec!["verify", "witt-classical", "--edges", "3", "--degree", "5"],
        vec!["verify", "plus-minus", "--edges", "2", "--degree", "4"],
        vec![
            "verify", "gen-witt", "--edges", "2", "--degree", "4", "--kind", "F",
        ],
        vec![
            "verify", "gen-witt", "--edges", "2", "--degree", "4", "--kind", "H",
        ],
    ] {
        let mut full = args.clone();
        full.push("--no-timing");
        let output = run(&full);
        assert_eq!(exit_code(&output), 0, "args: {args:?}");
    }
}

#[test]
fn verify_corruption_validation() {
    // wrong arity
    let bad = run(&[
        "verify",
        "sherman",
        "--edges",
        "2",
        "--degree",
        "4",
        "--corrupt",
        "1,1,1",
    ]);
    assert_eq!(exit_code(&bad), 2);
    // zeros not allowed in strictly positive product domains
    let bad = run(&[
        "verify",
        "cancellation",
        "--edges",
        "2",
        "--degree",
        "4",
        "--corrupt",
        "0,1",
    ]);
    assert_eq!(exit_code(&bad), 2);
    // but fine for the all-multidegree products
    let ok = run(&[
        "verify",
        "sherman",
        "--edges",
        "2",
        "--degree",
        "4",
        "--corrupt",
        "0,1",
        "--no-timing",
    ]);
    assert_eq!(exit_code(&ok), 1); // corrupted run fails verification
}

#[test]
fn output_is_deterministic_without_timing() {
    let first = run(&["count", "-m", "2,4", "--json", "--no-timing"]);
    let second = run(&["count", "-m", "2,4", "--json", "--no-timing"]);
    assert_eq!(first.stdout, second.stdout);
    let third = run(&[
        "verify",
        "sherman",
        "--edges",
        "2",
        "--degree",
        "5",
        "--json",
        "--no-timing",
    ]);
    let fourth = run(&[
        "verify",
        "sherman",
        "--edges",
        "2",
        "--degree",
        "5",
        "--json",
        "--no-timing",
    ]);
    assert_eq!(third.stdout, fourth.stdout);
}

#[test]
fn timing_field_appears_by_default() {
    let (record, _) = json_record(&["count", "-m", "1,1", "--json"]);
    assert!(record.get("elapsed_ms").is_some());
    let plain = run(&["count", "-m", "1,1"]);
    assert!(stdout(&plain).contains("elapsed:"));
}

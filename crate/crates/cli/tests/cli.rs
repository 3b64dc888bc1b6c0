use eaqmds_cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn eaqmds(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("eaqmds").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let r = eaqmds(args);
    (r.code, serde_json::from_str(&r.out).unwrap_or_else(|e| panic!("{e}: {}", r.out)))
}

#[test]
fn decompose_example() {
    let (code, v) = json(&["decompose", "--n", "17", "--q", "13", "--k", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["command"], "decompose");
    assert_eq!(v["data"]["tssSize"], 4);
    assert_eq!(v["data"]["tss"], serde_json::json!([[7, 10], [6, 11]]));
    let w = &v["data"]["witnesses"][0];
    assert_eq!(w["type"], "asymmetricPair");
    assert_eq!((w["rep"].as_u64(), w["partner"].as_u64()), (Some(6), Some(7)));
}

#[test]
fn cosets_cover_residues() {
    let (code, v) = json(&["cosets", "--n", "29", "--q", "17"]);
    assert_eq!(code, EXIT_OK);
    let cosets = v["data"]["cosets"].as_array().unwrap();
    let total: usize = cosets.iter().map(|c| c["elements"].as_array().unwrap().len()).sum();
    assert_eq!(total, 29);
    assert_eq!(cosets.len(), 15);
}

#[test]
fn code_example_and_schema() {
    let (code, v) = json(&["code", "--family", "1", "--l", "3", "--m", "1", "--d", "7"]);
    assert_eq!(code, EXIT_OK);
    for key in ["version", "command", "params", "records", "reports", "data"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let r = &v["records"][0];
    assert_eq!(
        (&r["q"], &r["n"], &r["k"], &r["d"], &r["c"]),
        (&Value::from(13), &Value::from(17), &Value::from(9), &Value::from(7), &Value::from(4))
    );
    assert_eq!(r["saturation"], "saturated");
    assert_eq!(r["mdsVerified"], true);
    assert_eq!(v["data"]["codeSpec"]["dimension"], 11);
    assert_eq!(v["data"]["codeSpec"]["generator"].as_array().unwrap().len(), 7);
}

#[test]
fn skipped_minor_check_is_a_string() {
    let (code, v) = json(&["code", "--family", "2", "--l", "7", "--m", "1", "--d", "13", "--cap", "10"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["records"][0]["mdsVerified"], "skipped");
    assert_eq!(v["records"][0]["minorCheck"]["verdict"], "skipped");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["code", "--family", "1", "--l", "3", "--m", "1", "--d", "8"][..],
        &["code", "--family", "3", "--l", "3", "--m", "1", "--d", "7"],
        &["verify", "--family", "1", "--l", "3", "--m", "3"],
        &["verify", "--family", "1", "--l", "4", "--m", "1"],
        &["decompose", "--n", "18", "--q", "13", "--k", "1"],
        &["tables", "--which", "4"],
        &["sweep", "--family", "1", "--l-range", "5..3", "--m-range", "1..2"],
        &["frobnicate"],
        &[],
    ] {
        let r = eaqmds(args);
        assert_eq!(r.code, EXIT_USAGE, "{args:?}: {}", r.err);
        assert!(r.out.is_empty(), "{args:?} wrote to stdout");
        assert!(!r.err.is_empty());
    }
}

#[test]
fn help_and_version_exit_0() {
    let r = eaqmds(&["--help"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("selfcheck"));
    let r = eaqmds(&["--version"]);
    assert_eq!(r.code, EXIT_OK);
}

#[test]
fn strict_turns_discrepancies_into_failure() {
    let args = ["verify", "--family", "2", "--l", "7", "--m", "1"];
    let (code, v) = json(&args);
    assert_eq!(code, EXIT_OK);
    assert!(!v["reports"].as_array().unwrap().is_empty());
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(eaqmds(&strict).code, EXIT_FAILED);

    // nothing to report for the cosets of a small modulus
    assert_eq!(eaqmds(&["cosets", "--n", "5", "--q", "2", "--strict"]).code, EXIT_OK);
}

#[test]
fn verify_without_all_d_checks_range_ends() {
    let (code, v) = json(&["verify", "--family", "1", "--l", "3", "--m", "1"]);
    assert_eq!(code, EXIT_OK);
    let ds: Vec<u64> = v["records"].as_array().unwrap().iter().map(|r| r["d"].as_u64().unwrap()).collect();
    assert_eq!(ds, [7, 11]);
    assert_eq!(v["data"]["computedRange"], serde_json::json!([7, 11]));
    assert_eq!(v["data"]["statedRange"], serde_json::json!([7, 8]));
}

#[test]
fn tables_two_has_nine_rows_and_reports() {
    let (code, v) = json(&["tables", "--which", "2", "--full-up-to", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["data"]["rows"].as_array().unwrap().len(), 9);
    let reports = v["reports"].as_array().unwrap();
    assert!(reports.iter().any(|r| r["claim"] == "table2.header"));
    assert!(reports.iter().any(|r| r["kind"] == "tableTypo" && r["witness"]["printed"] == 142));
}

#[test]
fn tables_three_text() {
    let r = eaqmds(&["tables", "--which", "3", "--format", "text"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("MISMATCH"));
    assert!(r.out.contains("l=10m+3 or l=10m+7"));
}

#[test]
fn csv_flattens_records() {
    let r = eaqmds(&["verify", "--family", "1", "--l", "3", "--m", "1", "--all-d", "--format", "csv"]);
    assert_eq!(r.code, EXIT_OK);
    let mut rows = csv::Reader::from_reader(r.out.as_bytes());
    let headers = rows.headers().unwrap().clone();
    assert_eq!(&headers[3], "q");
    assert_eq!(&headers[9], "mdsVerified");
    let ks: Vec<String> = rows.records().map(|x| x.unwrap()[5].to_string()).collect();
    assert_eq!(ks, ["9", "5", "1"]);
}

#[test]
fn sweep_skips_and_orders() {
    let args = ["sweep", "--family", "1", "--l-range", "3..5", "--m-range", "1..3", "--jobs", "3"];
    let (code, v) = json(&args);
    assert_eq!(code, EXIT_OK);
    let grid = v["data"]["grid"].as_array().unwrap();
    let order: Vec<(u64, u64)> = grid
        .iter()
        .map(|g| (g["l"].as_u64().unwrap(), g["m"].as_u64().unwrap()))
        .collect();
    assert_eq!(order, [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3)]);
    // q = 33 is not a prime power; l = 4 is even; q = 57 = 3 * 19; q = 83 is prime
    let status: Vec<&str> = grid.iter().map(|g| g["status"].as_str().unwrap()).collect();
    assert_eq!(status, ["ok", "ok", "skipped", "skipped", "skipped", "skipped", "ok", "skipped", "ok"]);

    // thread count does not change the bytes
    let mut one = args.to_vec();
    *one.last_mut().unwrap() = "1";
    assert_eq!(eaqmds(&args).out, eaqmds(&one).out);
}

#[test]
fn identical_runs_give_identical_json() {
    let a = eaqmds(&["tables", "--which", "2", "--full-up-to", "17"]).out;
    let b = eaqmds(&["tables", "--which", "2", "--full-up-to", "17"]).out;
    assert_eq!(a, b);
}

#[test]
fn selfcheck_passes() {
    let (code, v) = json(&["selfcheck"]);
    assert_eq!(code, EXIT_OK);
    let checks = v["data"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["passed"] == true), "{checks:?}");
}

use std::process::{Command, Output};

use binofib::verify::VerificationRecord;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binofib"))
        .args(args)
        .output()
        .expect("spawn binofib")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o).trim_end().to_string()
}

#[test]
fn sequences() {
    assert_eq!(ok(&["fib", "10"]), "55");
    assert_eq!(ok(&["lucas", "0"]), "2");
    assert_eq!(ok(&["fib", "-7"]), "13");
    assert_eq!(ok(&["lucas", "-5"]), "-11");
    let json = ok(&["fib", "100", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["value"], "354224848179261915075");
}

#[test]
fn malformed_index_is_usage_error() {
    assert_eq!(run(&["fib", "ten"]).status.code(), Some(2));
    assert_eq!(run(&["lucas"]).status.code(), Some(2));
}

#[test]
fn sums() {
    assert_eq!(ok(&["sum", "--n", "2", "--j", "1", "--r", "1", "--s", "1", "--m", "3", "--x", "1", "--z", "1", "--seq", "F"]), "11");
    assert_eq!(ok(&["sum", "--n", "3", "--m", "1", "--seq", "L", "--x", "1", "--z", "1", "--j", "1", "--r", "1", "--s", "0"]), "18");
    assert_eq!(ok(&["sum", "--n", "5", "--m", "0", "--seq", "F", "--x", "1", "--z", "1", "--j", "1", "--r", "1", "--s", "0"]), "32");
    assert_eq!(ok(&["sum", "--n", "2", "--x", "1/2", "--z", "-1/3", "--j", "-1"]), "-4/9");
    assert_eq!(run(&["sum", "--n", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["sum", "--n", "2", "--m", "-1"]).status.code(), Some(2));
}

#[test]
fn closed() {
    assert_eq!(ok(&["closed", "--id", "C18", "--n", "2", "--s", "1"]), "lhs=11 rhs=11 MATCH");
    assert_eq!(ok(&["closed", "--id", "E9", "--n", "2", "--j", "1", "--r", "1", "--s", "0", "--p", "2"]), "lhs=-3 rhs=-3 MATCH");
    let o = run(&["closed", "--id", "Q13", "--p", "0", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("p must be nonzero"));
    assert_eq!(run(&["closed", "--id", "Z99"]).status.code(), Some(2));
    assert_eq!(run(&["closed", "--id", "EVEN_F", "--m", "-1"]).status.code(), Some(2));
}

#[test]
fn closed_json() {
    let line = ok(&["closed", "--id", "ALT_ODD_L", "--n", "4", "--j", "-2", "--r", "3", "--s", "1", "--m", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(v["match"], true);
    assert_eq!(v["lhs"], v["rhs"]);
    assert!(v["lhs"].is_string());
    assert_eq!(serde_json::to_string(&v).unwrap(), line);
}

#[test]
fn verify_json_stream() {
    let out = ok(&["verify", "--ids", "C18", "--n", "0..2", "--s", "0..1", "--format", "json"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    for line in &lines[..6] {
        let rec = VerificationRecord::from_json_line(line).unwrap();
        assert_eq!(rec.matched, Some(true));
        assert_eq!(rec.to_json_line(), *line);
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), *line);
    }
    let summary: serde_json::Value = serde_json::from_str(lines[6]).unwrap();
    assert_eq!(summary["summary"]["verdict"], "PASS");
    assert_eq!(summary["summary"]["checks"], 6);
}

#[test]
fn verify_all_skipped_is_success() {
    // n in 0..3 and the default j, r, s ranges: 4 * 9^3 points.
    let out = ok(&["verify", "--ids", "Q13", "--p", "0..0", "--n", "0..3"]);
    assert!(out.ends_with("PASS (0 checks, 2916 skipped)"), "{out}");
}

#[test]
fn verify_negative_ranges_and_jobs() {
    let a = ok(&["verify", "--ids", "E9,Q15", "--n", "0..4", "--j", "-2..2", "--p", "-2..-1", "--jobs", "1", "--format", "json"]);
    let b = ok(&["verify", "--ids", "Q15,E9", "--n", "0..4", "--j", "-2..2", "--p", "-2..-1", "--jobs", "3", "--format", "json"]);
    assert_eq!(a, b);
    assert!(a.lines().next().unwrap().starts_with(r#"{"id":"E9""#));
}

#[test]
fn verify_out_of_contract() {
    let out = ok(&["verify", "--ids", "Q14", "--p", "0", "--n", "0..3", "--out-of-contract", "--format", "json"]);
    let first = VerificationRecord::from_json_line(out.lines().next().unwrap()).unwrap();
    assert_eq!(first.note.as_deref(), Some("out-of-contract: p must be nonzero"));
    assert_eq!(first.matched, Some(true));
}

#[test]
fn verify_bad_ranges() {
    assert_eq!(run(&["verify", "--n", "5..1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "-2..1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--s", "a..b"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--ids", "C18,BOGUS"]).status.code(), Some(2));
}

#[test]
fn list() {
    let text = ok(&["list"]);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 30);
    let c18 = rows.iter().find(|r| r.starts_with("C18 ")).unwrap();
    assert!(c18.contains("2^n F_{2n+3s} + 3F_{n-s}"), "{c18}");

    let json = ok(&["list", "--format", "json"]);
    let objs: Vec<serde_json::Value> = json.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(objs.len(), 30);
    assert_eq!(objs[0]["id"], "F1");
    assert!(objs.iter().all(|o| o["anchor"].is_string() && o["slots"].is_array()));
}

#[test]
fn bench_small() {
    let out = ok(&["bench", "--id", "F1", "--n", "0", "--reps", "3"]);
    assert!(out.contains("speedup"));
    let o = run(&["bench", "--id", "Q14", "--p", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mirrorcayley")).env("MIRRORCAYLEY_CACHE", cache).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn expand_json_is_exact() {
    let d = tempfile::tempdir().unwrap();
    let o = run(d.path(), &["expand", "C3", "--order", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["offset"], serde_json::json!([1, 3]));
    assert_eq!(v["coeffs"][2], serde_json::json!([6, 1]));
}

#[test]
fn expand_formats() {
    let d = tempfile::tempdir().unwrap();
    let csv = stdout(&run(d.path(), &["expand", "cayley:C3", "--order", "7", "--format", "csv"]));
    assert!(csv.starts_with("exponent,numerator,denominator"));
    assert!(csv.contains("3,1,162") && csv.contains("6,1,131220"), "{csv}");
    let pretty = stdout(&run(d.path(), &["expand", "C3", "--order", "2", "--format", "pretty"]));
    assert!(pretty.starts_with("C3 = 3 q^(1/3) + 3 q^(4/3) + 6 q^(7/3)"), "{pretty}");
}

#[test]
fn usage_errors_exit_two() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(run(d.path(), &["expand", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(d.path(), &["expand", "C3", "--order", "0"]).status.code(), Some(2));
    assert_eq!(run(d.path(), &["verify", "monodromy", "--precision", "20"]).status.code(), Some(2));
    assert_eq!(run(d.path(), &["verify", "bogus"]).status.code(), Some(2));
}

#[test]
fn cache_round_trip_and_reuse() {
    let d = tempfile::tempdir().unwrap();
    let first = stdout(&run(d.path(), &["expand", "fjrw:cubic:f3", "--order", "12"]));
    let list = json(&run(d.path(), &["cache", "list"]));
    assert_eq!(list["entries"][0]["name"], "fjrw:cubic:f3");
    assert_eq!(list["entries"][0]["order"], 12);
    // a shorter request is served from the longer entry
    let short = json(&run(d.path(), &["expand", "fjrw:cubic:f3", "--order", "6"]));
    let long: Value = serde_json::from_str(first.trim()).unwrap();
    assert_eq!(short["coeffs"][5], long["coeffs"][5]);
    assert_eq!(short["order"], 6);
    assert_eq!(json(&run(d.path(), &["cache", "clear"]))["removed"], 1);
    assert_eq!(json(&run(d.path(), &["cache", "list"]))["entries"].as_array().unwrap().len(), 0);
}

#[test]
fn corrupt_cache_is_recomputed() {
    let d = tempfile::tempdir().unwrap();
    let good = stdout(&run(d.path(), &["expand", "A3", "--order", "8"]));
    for entry in fs::read_dir(d.path()).unwrap() {
        fs::write(entry.unwrap().path(), "{ not json").unwrap();
    }
    let o = run(d.path(), &["expand", "A3", "--order", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), good);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn cache_dir_flag_beats_environment() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    run(env_dir.path(), &["expand", "B3", "--order", "3", "--cache-dir", flag_dir.path().to_str().unwrap()]);
    assert_eq!(fs::read_dir(env_dir.path()).unwrap().count(), 0);
    assert_eq!(fs::read_dir(flag_dir.path()).unwrap().count(), 1);
}

#[test]
fn normalizations_are_cached_separately() {
    let d = tempfile::tempdir().unwrap();
    let good = json(&run(d.path(), &["expand", "E3", "--order", "3"]));
    let bad = json(&run(d.path(), &["expand", "E3", "--order", "3", "--e3-denominator", "3"]));
    assert_ne!(good["coeffs"], bad["coeffs"]);
    assert_eq!(fs::read_dir(d.path()).unwrap().count(), 2);
}

#[test]
fn verify_passes_and_negative_control_fails() {
    let d = tempfile::tempdir().unwrap();
    let ok = run(d.path(), &["verify", "correspondence", "--order", "12"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["pass"], true);

    let bad = run(d.path(), &["verify", "correspondence", "--order", "12", "--case", "cubic", "--e3-denominator", "3"]);
    assert_eq!(bad.status.code(), Some(1));
    let v = json(&bad);
    assert_eq!(v["pass"], false);
    assert!(v["first_failure"].as_str().unwrap().contains("at order 0"));
}

#[test]
fn verify_csv_and_pretty() {
    let d = tempfile::tempdir().unwrap();
    let csv = stdout(&run(d.path(), &["verify", "ramanujan", "--order", "10", "--level", "2", "--format", "csv"]));
    assert!(csv.starts_with("section,pass,first_failure"));
    assert!(csv.lines().skip(1).all(|l| l.contains(",true,")), "{csv}");
    let pretty = stdout(&run(d.path(), &["verify", "monodromy", "--level", "3", "--precision", "30", "--format", "pretty"]));
    assert!(pretty.trim_end().ends_with("monodromy: pass"), "{pretty}");
}

use std::path::Path;
use std::process::{Command, Output};

use forestrep::character::{DecompositionEntry, IrredDecomposition};
use forestrep::forest_rep::FrobeniusCacheJson;
use forestrep::tables::{format_table_line, reference_tables};
use forestrep::PartialTransformation;
use serde_json::Value;

fn forestrep(args: &[&str]) -> Output {
    forestrep_with_cache(args, None)
}

fn forestrep_with_cache(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_forestrep"));
    cmd.args(args).env_remove("FORESTREP_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("FORESTREP_CACHE_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = forestrep(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn count_matches_the_closed_form() {
    assert_eq!(ok(&["count", "--n", "3", "--k", "2"]), "9\n");
    assert_eq!(ok(&["count", "--n", "4", "--check"]), "C(0,4) 1\nC(1,4) 12\nC(2,4) 48\nC(3,4) 64\ntotal 125\n");
    let v: Value = serde_json::from_str(&ok(&["count", "--n", "6", "--k", "3", "--format", "json"])).unwrap();
    assert_eq!(v["count"].to_string(), "2160");
}

#[test]
fn sign_totals() {
    assert_eq!(ok(&["sign", "--n", "6", "--total"]), "16\n");
    assert_eq!(ok(&["sign", "--n", "7", "--total"]), "34\n");
    let per = ok(&["sign", "--n", "5", "--per-stratum"]);
    assert_eq!(per, "C(0,5) 0\nC(1,5) 0\nC(2,5) 1\nC(3,5) 3\nC(4,5) 4\ntotal 8\n");
}

#[test]
fn tables_reproduce_the_reference_lines() {
    let reference = reference_tables();
    for n in [4usize, 5, 6] {
        let expected: String =
            (0..n).map(|k| format_table_line(n, k, &reference[&(n, k)]) + "\n").collect();
        assert_eq!(ok(&["table", "--n", &n.to_string()]), expected, "n = {n}");
    }
    let expected: String = (0..5).map(|k| format_table_line(5, k, &reference[&(5, k)]) + "\n").collect();
    assert_eq!(ok(&["table", "--n", "5", "--method", "fixed-point"]), expected);
}

#[test]
fn decompose_json_round_trips() {
    let text = ok(&["decompose", "--n", "6", "--k", "4", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let entries: Vec<DecompositionEntry> = serde_json::from_value(v["decomposition"].clone()).unwrap();
    let d = IrredDecomposition::from_json(6, &entries).unwrap();
    assert_eq!(d, reference_tables()[&(6, 4)]);
    assert_eq!(text, ok(&["decompose", "--n", "6", "--k", "4", "--format", "json"]));
}

#[test]
fn character_values() {
    let text = ok(&["character", "--n", "3", "--k", "1", "--method", "fixed-point"]);
    assert_eq!(text, ok(&["character", "--n", "3", "--k", "1"]));
    assert!(text.contains("[1,1,1]: 6"), "{text}");
}

#[test]
fn decompose_odun_reports_the_cherry() {
    let text = ok(&["decompose-odun", "--odun", "(()())"]);
    assert!(text.contains("frobenius s[3] + s[2,1]\n"), "{text}");
    assert!(text.contains("dimension 3\n"));
    let v: Value = serde_json::from_str(&ok(&["decompose-odun", "--odun", "((())())", "--format", "json"])).unwrap();
    assert_eq!(v["odun"], "(()(()))");
    assert_eq!(v["dimension"].to_string(), "24");
}

#[test]
fn enumerate_streams_json_lines() {
    let text = ok(&["enumerate", "--n", "4", "--k", "2", "--format", "json"]);
    let maps: Vec<PartialTransformation> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(maps.len(), 48);
    assert!(maps.iter().all(|f| f.is_nilpotent() && f.rank() == 2));
    assert_eq!(ok(&["enumerate", "--n", "5", "--k", "3", "--limit", "7"]).lines().count(), 7);
}

#[test]
fn oduns_and_blossoming() {
    assert_eq!(ok(&["oduns", "--n", "4"]).lines().count(), 9);
    assert_eq!(ok(&["oduns", "--n", "5", "--components", "1"]).lines().count(), 9);
    assert_eq!(ok(&["oduns", "--n", "5", "--blossoming-only"]).lines().count(), 8);
    let v: Value = serde_json::from_str(&ok(&["blossoming", "--n", "8", "--format", "json"])).unwrap();
    assert_eq!(v["count"], 75);
    assert_eq!(v["without_isolated_vertex"], 52);
    assert_eq!(v["with_isolated_vertex"], 23);
}

#[test]
fn rooks() {
    let text = ok(&["rooks", "--n", "4", "--parts", "2"]);
    assert!(text.ends_with("sign 2\n"), "{text}");
    let v: Value = serde_json::from_str(&ok(&["rooks", "--n", "6", "--parts", "3", "--format", "json"])).unwrap();
    // (4,1,1) repeats the odd part 1; (3,2,1) and (2,2,2) are admissible
    assert_eq!(v["sign_count"], 2);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["count", "--n", "3", "--k", "3"][..],
        &["count", "--n", "0"],
        &["enumerate", "--n", "9", "--k", "1"],
        &["decompose-odun", "--odun", "(()"],
        &["rooks", "--n", "3", "--parts", "4"],
        &["oduns", "--n", "3", "--components", "0"],
        &["table", "--n", "9", "--method", "fixed-point"],
        &["no-such-command"],
        &["count", "--n", "x"],
        &["--threads", "0", "count", "--n", "2"],
    ] {
        let o = forestrep(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn verify_reports_every_criterion_and_the_notices() {
    let o = forestrep(&["verify", "--max-n", "4"]);
    let text = stdout(&o);
    for id in 1..=11 {
        assert!(text.contains(&format!("criterion {id:>2}:")), "criterion {id} missing:\n{text}");
    }
    assert!(text.contains("[FAIL] criterion  4"));
    assert!(text.contains("[PASS] criterion 10"));
    assert!(text.contains("printed s[2,1] + s[1,1,1], computed s[3] + s[2,1]"));
    assert!(text.contains("f = 2 while <F, p1^3> = 3"));
    // the power-of-two criteria fail, so the run is an integrity failure
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("criterion 4, criterion 5"));
    let again = forestrep(&["verify", "--max-n", "4"]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn cache_directory_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let first = forestrep_with_cache(&["decompose-odun", "--odun", "((())(()))"], Some(dir.path()));
    assert_eq!(first.status.code(), Some(0));
    let file = dir.path().join("frobenius-cache.json");
    let cache: FrobeniusCacheJson = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert!(cache.entries.contains_key("((())(()))"));
    let second = forestrep_with_cache(&["decompose-odun", "--odun", "((())(()))"], Some(dir.path()));
    assert_eq!(second.stdout, first.stdout);

    // a tampered cache is ignored with a warning
    std::fs::write(&file, r#"{"entries":{"(())":{"basis":"p","terms":[{"partition":[1],"coeff":"5"}]}}}"#).unwrap();
    let third = forestrep_with_cache(&["decompose-odun", "--odun", "(())"], Some(dir.path()));
    assert_eq!(third.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&third.stderr).contains("ignoring cache"));
    assert!(stdout(&third).contains("frobenius s[2] + s[1,1]\n"), "{}", stdout(&third));
}

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn regpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regpow"))
        .args(args)
        .env_remove("REGPOW_JOBS")
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect()
}

fn single(args: &[&str]) -> (i32, Value) {
    let out = regpow(args);
    let mut reports = lines(&out);
    assert_eq!(reports.len(), 1, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    (out.status.code().unwrap(), reports.remove(0))
}

#[test]
fn pentagon_regularity() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.txt", "5 5\n1 2\n1 5\n2 3\n3 4\n4 5\n");
    let (code, rep) = single(&["compute", "--graph", &c5, "--task", "reg"]);
    assert_eq!(code, 0);
    assert_eq!(rep["quantities"]["value"], 3);
    assert!(!rep["certificates"]["extremal"].as_array().unwrap().is_empty());
}

#[test]
fn square_has_linear_resolution() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.txt", "4 4\n1 2\n1 4\n2 3\n3 4\n");
    let (code, rep) = single(&["compute", "--graph", &c4, "--task", "linres", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!(rep["quantities"]["value"], true);
    assert_eq!(rep["quantities"]["value_koszul"], true);
}

#[test]
fn two_disjoint_edges_are_a_gap() {
    let dir = TempDir::new().unwrap();
    let k2k2 = write(&dir, "k2k2.txt", "4 2\n1 2\n3 4\n");
    let (code, rep) = single(&["compute", "--graph", &k2k2, "--task", "gapfree"]);
    assert_eq!(code, 0);
    assert_eq!(rep["quantities"]["value"], false);
}

#[test]
fn json_graphs_and_family_specs_agree() {
    let dir = TempDir::new().unwrap();
    let json = write(&dir, "c6.json", r#"{"n":6,"edges":[[1,2],[2,3],[3,4],[4,5],[5,6],[1,6]]}"#);
    let (_, from_file) = single(&["compute", "--graph", &json, "--task", "power", "--s", "2"]);
    let (_, from_spec) = single(&["compute", "--graph", "cycle:6", "--task", "power", "--s", "2"]);
    assert_eq!(from_file["quantities"], from_spec["quantities"]);
    assert_eq!(from_file["quantities"]["value"], 5);
}

#[test]
fn methods_and_full_scan_agree() {
    for task in ["reg", "power", "symbolic"] {
        let (code, rep) = single(&[
            "compute", "--graph", "cycle:7", "--task", task, "--s", "2", "--method", "both", "--audit-full-scan",
        ]);
        assert_eq!(code, 0, "{task}");
        let q = &rep["quantities"];
        assert_eq!(q["value"], q["value_koszul"], "{task}");
        assert_eq!(q["value"], q["value_full_scan"], "{task}");
    }
}

#[test]
fn ideal_input_over_other_fields() {
    let dir = TempDir::new().unwrap();
    // Stanley-Reisner ideal of the six-vertex projective plane.
    let facets = [
        [1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5],
        [2, 3, 5], [2, 3, 4], [2, 5, 6], [3, 4, 6], [4, 5, 6],
    ];
    let mut gens = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            for c in b + 1..=6 {
                if !facets.contains(&[a, b, c]) {
                    gens.push(format!("x{a}*x{b}*x{c}"));
                }
            }
        }
    }
    let path = write(&dir, "rp2.txt", &format!("6\n{}\n", gens.join(",")));
    let reg = |field: &str| single(&["compute", "--ideal", &path, "--field", field, "--method", "both"]).1;
    assert_eq!(reg("gf2")["quantities"]["value"], 4);
    assert_eq!(reg("gfp:3")["quantities"]["value"], 3);
    assert_eq!(reg("q")["quantities"]["value"], 3);
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let dup = write(&dir, "dup.txt", "3 2\n1 2\n1 2\n");
    let out = regpow(&["compute", "--graph", &dup]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let missing = dir.path().join("absent.txt");
    let out = regpow(&["compute", "--graph", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = regpow(&["compute", "--graph", "cycle:5", "--field", "gfp:4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = regpow(&["verify", "pow2", "--nmax", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_streams_are_deterministic_across_job_counts() {
    let args = ["verify", "pow2", "--nmax", "4", "--samples", "6", "--seed", "9"];
    let one = regpow(&[&args[..], &["--jobs", "1"]].concat());
    let four = regpow(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let reports = lines(&one);
    let indices: Vec<_> = reports.iter().filter_map(|r| r["index"].as_u64()).collect();
    assert!(indices.windows(2).all(|w| w[0] <= w[1]));
    let summary = reports.last().unwrap();
    assert_eq!(summary["summary"], true);
    assert_eq!(summary["failed"], 0);
}

#[test]
fn search_reports_without_asserting() {
    for graph in ["complete:3", "cycle:5"] {
        let out = regpow(&["search", "--graph", graph, "--s", "4"]);
        assert_eq!(out.status.code(), Some(0));
        assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
        let reports = lines(&out);
        let q = &reports[0]["quantities"];
        assert_eq!(q["reg_powers_sequence"].as_array().unwrap().len(), 4);
        assert_eq!(q["conjectured"], 8);
    }
    let out = regpow(&["search", "--s", "4", "--nmax", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_at_s2_conforms_everywhere() {
    let out = regpow(&["search", "--s", "2", "--nmax", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let summary = lines(&out).pop().unwrap();
    assert_eq!(summary["tallies"]["candidate_counterexamples"], 0);
    assert!(summary["tallies"]["conforming"].as_u64().unwrap() > 0);
}

#[test]
fn help_lists_subcommands() {
    let out = regpow(&["--help"]);
    let text = String::from_utf8_lossy(&out.stdout);
    for sub in ["compute", "verify", "search"] {
        assert!(text.contains(sub));
    }
    assert!(Path::new(env!("CARGO_BIN_EXE_regpow")).exists());
}

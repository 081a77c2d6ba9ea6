use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect()
}

fn mpf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpf")).args(args).output().expect("mpf runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn h11_trace_matches_golden_file() {
    let out = mpf(&["trace", path(&fixture("h11.txt"))]);
    assert_eq!(out.status.code(), Some(0));
    let golden = std::fs::read_to_string(fixture("h11.trace")).unwrap();
    assert_eq!(stdout(&out), golden);
}

#[test]
fn trace_of_a_given_forest() {
    let dir = tempfile::tempdir().unwrap();
    let forest = dir.path().join("f11.txt");
    std::fs::write(&forest, "11 9\n1 3\n1 4\n3 8\n4 7\n7 6\n7 9\n2 5\n2 10\n5 11\n").unwrap();
    let out = mpf(&["trace", path(&fixture("h11.txt")), "--forest", forest.to_str().unwrap()]);
    assert_eq!(stdout(&out), std::fs::read_to_string(fixture("h11.trace")).unwrap());
}

#[test]
fn validate_reports_roots_and_rsum() {
    let out = mpf(&["validate", path(&fixture("k3.txt")), "inf 0 1"]);
    assert_eq!(stdout(&out), "valid, roots={1}, rsum=0\n");
    assert_eq!(out.status.code(), Some(0));
    let out = mpf(&["validate", path(&fixture("k3.txt")), "inf 2 2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).starts_with("invalid"));
}

#[test]
fn tutte_json_terms() {
    let out = mpf(&["tutte", "--method", "dc", "--json", path(&fixture("k3.txt"))]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "1");
    let terms: Vec<(u64, u64, String)> = v["polynomial"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["x"].as_u64().unwrap(), t["y"].as_u64().unwrap(), t["c"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(terms, vec![(0, 1, "1".into()), (1, 0, "1".into()), (2, 0, "1".into())]);
}

#[test]
fn every_tutte_method_agrees() {
    let k4 = fixture("k4.txt");
    let expect = stdout(&mpf(&["tutte", path(&k4)]));
    assert_eq!(expect, "x^3 + 3*x^2 + 4*x*y + 2*x + y^3 + 3*y^2 + 2*y\n");
    for method in ["activities", "corank", "bfs", "mpf"] {
        for choice in ["bfsq", "dfs", "stack"] {
            let out = mpf(&["tutte", "--method", method, "--choice", choice, path(&k4)]);
            assert_eq!(stdout(&out), expect, "{method} {choice}");
        }
    }
}

#[test]
fn verify_exit_codes_follow_errata_flag() {
    let k3 = fixture("k3.txt");
    let strict = mpf(&["verify", "--all", path(&k3)]);
    assert_eq!(strict.status.code(), Some(2));
    assert!(stdout(&strict).contains("MISMATCH (known erratum)"));
    let lenient = mpf(&["verify", "--all", "--expect-erratum", path(&k3)]);
    assert_eq!(lenient.status.code(), Some(0));
    let json = mpf(&["verify", "--all", "--expect-erratum", "--json", path(&k3)]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["schema"], "1");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(mpf(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(mpf(&["tutte", "--method", "magic", path(&fixture("k3.txt"))]).status.code(), Some(1));
    let missing = mpf(&["tutte", "/nonexistent/graph.txt"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("cannot read"));
    assert_eq!(mpf(&["verify", path(&fixture("k3.txt"))]).status.code(), Some(1));
    assert_eq!(mpf(&["--help"]).status.code(), Some(0));
}

#[test]
fn forest_and_function_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = fixture("k4.txt");
    for (function, choice) in [("inf 0 1 2", "bfsq"), ("inf 1 0 inf", "dfs"), ("inf inf inf inf", "secondmin")] {
        let forest = mpf(&["to-forest", "--choice", choice, path(&k4), function]);
        assert_eq!(forest.status.code(), Some(0));
        let file = dir.path().join("forest.txt");
        std::fs::write(&file, &forest.stdout).unwrap();
        let back = mpf(&["to-mpf", "--choice", choice, path(&k4), file.to_str().unwrap()]);
        assert_eq!(stdout(&back), format!("{function}\n"));
    }
}

#[test]
fn directed_round_trip_with_parallel_arcs() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("d.txt");
    std::fs::write(&d, "3 5\n2 1 2\n3 2\n3 1\n1 3\n2 3\n").unwrap();
    let forest = mpf(&["to-forest", "--directed", d.to_str().unwrap(), "inf 1 0"]);
    assert_eq!(forest.status.code(), Some(0), "{}", String::from_utf8_lossy(&forest.stderr));
    let file = dir.path().join("forest.txt");
    std::fs::write(&file, &forest.stdout).unwrap();
    let back = mpf(&["to-mpf", "--directed", d.to_str().unwrap(), file.to_str().unwrap()]);
    assert_eq!(stdout(&back), "inf 1 0\n");
}

#[test]
fn process_table_for_triangle() {
    let out = mpf(&["to-forest", "--trace", path(&fixture("k3.txt")), "inf 0 1"]);
    assert_eq!(
        stdout(&out),
        "3 2\n1 2\n2 3\norder: 1 2 3\n\
         t   | 0   | 1   | 2     | 3\n\
         Q_t | (1) | (2) | (3)   | ∅\n\
         P_t | ∅   | {1} | {1,2} | {1,2,3}\n"
    );
}

#[test]
fn enumerate_counts_t21() {
    let out = mpf(&["enumerate", path(&fixture("k3.txt"))]);
    assert!(stdout(&out).ends_with("7 functions\n"));
    let out = mpf(&["enumerate", "--json", path(&fixture("c5.txt"))]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // t(2,1) for a 5-cycle: 2^4 + 2^3 + 2^2 + 2 + 1
    assert_eq!(v["count"], 31);
}

#[test]
fn census_subcommands() {
    let k3 = fixture("k3.txt");
    let st = stdout(&mpf(&["census", "subtraffics", path(&k3)]));
    assert!(st.contains("count: 125"));
    assert!(st.contains("stated count 3^|E| t(2,5/3): 207 (known erratum)"));
    let sd = mpf(&["census", "subdigraphs", path(&k3)]);
    assert_eq!(sd.status.code(), Some(0));
    assert!(stdout(&sd).ends_with("match\n"));
    let gamma = stdout(&mpf(&["census", "gamma-tk", path(&k3)]));
    assert!(gamma.lines().any(|l| l == "2 0 3 3 3 0"));
    let ginv = stdout(&mpf(&["census", "ginv", path(&k3)]));
    assert!(ginv.starts_with("k=1: ginv y + 2 | rsum y + 2\n"));
    let capped = mpf(&["census", "subtraffics", "--max-edges", "2", path(&k3)]);
    assert_eq!(capped.status.code(), Some(1));
}

#[test]
fn dot_export_marks_forest_edges() {
    let out = stdout(&mpf(&["trace", "--dot", path(&fixture("k3.txt"))]));
    assert!(out.starts_with("graph G {"));
    assert_eq!(out.matches("penwidth=2.5").count(), 2);
}

#[test]
fn output_is_deterministic() {
    let k4 = fixture("k4.txt");
    let args = ["verify", "--all", "--expect-erratum", "--json", path(&k4)];
    assert_eq!(mpf(&args).stdout, mpf(&args).stdout);
}

use std::path::PathBuf;

use multiparking::census::{verify_all, Verdict, VerifyOptions};
use multiparking::graph::parse_graph;

fn fixture(name: &str) -> multiparking::Graph {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    parse_graph(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn report(name: &str) -> multiparking::census::CensusReport {
    verify_all(&fixture(name), &VerifyOptions::default()).unwrap()
}

#[test]
fn fixtures_verify_clean_apart_from_errata() {
    for name in ["k3.txt", "k4.txt", "c5.txt", "p4.txt", "h11.txt"] {
        let r = report(name);
        let failures: Vec<_> = r.failures(true).iter().map(|e| e.name.clone()).collect();
        assert!(failures.is_empty(), "{name}: {failures:?}");
        assert!(r.entries.iter().any(|e| e.verdict == Verdict::Match), "{name}");
    }
}

#[test]
fn stated_subtraffic_count_is_flagged_even_on_a_tree() {
    // t = x^3, so the stated count is 27 * 8 = 216 against 5^3 = 125
    let r = report("p4.txt");
    let failures = r.failures(false);
    assert!(!failures.is_empty());
    assert!(failures.iter().all(|e| e.erratum));
    let stated = r.entry("subtraffic count = 3^|E| t(2,5/3) (stated)").unwrap();
    assert_eq!((stated.left.as_str(), stated.right.as_str()), ("125", "216"));
}

#[test]
fn report_serializes_with_schema() {
    let json = serde_json::to_value(report("k3.txt")).unwrap();
    assert_eq!(json["schema"], "1");
    let stated = json["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == "subtraffic count = 3^|E| t(2,5/3) (stated)")
        .unwrap();
    assert_eq!(stated["verdict"], "mismatch");
    assert_eq!(stated["erratum"], true);
}

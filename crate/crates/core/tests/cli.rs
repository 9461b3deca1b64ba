use std::path::Path;

use bergesat::builders::build_path_tree;
use bergesat::cli::format::{parse_hypergraph, write_hypergraph};
use bergesat::cli::report::ReportDocument;
use bergesat::cli::run;
use bergesat::Hypergraph;
use proptest::prelude::*;

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bergesat").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_check_contains_round() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.hg");
    let (code, _, _) = exec(&["gen", "path-tree", "-k", "3", "-m", "10", "-o", path_str(&t)]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&t).unwrap();
    assert_eq!(text.lines().next(), Some("31 3"));
    assert_eq!(text.lines().count(), 16);
    assert_eq!(parse_hypergraph(&text).unwrap(), build_path_tree(3, 10).unwrap());

    let report = dir.path().join("r.json");
    let (code, out, _) = exec(&["check", "-f", path_str(&t), "--pattern", "path:10", "--report", path_str(&report)]);
    assert_eq!((code, out.as_str()), (0, "SATURATED\n"));
    let doc: ReportDocument = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(doc.result["saturated"], true);
    assert_eq!(doc.result["scanned"], 4480);
    let echoed: Hypergraph = serde_json::from_value(doc.parameters["hypergraph"].clone()).unwrap();
    assert_eq!(echoed, build_path_tree(3, 10).unwrap());

    let (code, out, _) = exec(&["contains", "-f", path_str(&t), "--pattern", "path:10"]);
    assert_eq!((code, out.as_str()), (1, "NO\n"));
    let (code, out, _) = exec(&["contains", "-f", path_str(&t), "--pattern", "path:9", "--witness"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("YES\n{"));
}

#[test]
fn negative_answers_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("p.hg");
    std::fs::write(&t, "7 3\n0 1 2\n2 3 4\n4 5 6\n").unwrap();
    let (code, out, _) = exec(&["check", "-f", path_str(&t), "--pattern", "path:6"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("NOT SATURATED "));
    let (code, out, _) = exec(&["check", "-f", path_str(&t), "--pattern", "path:3"]);
    assert_eq!((code, out.as_str()), (1, "NOT FREE\n"));
    let (code, out, _) = exec(&["contains", "-f", path_str(&t), "--pattern", "cycle:3"]);
    assert_eq!((code, out.as_str()), (1, "NO\n"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.hg");
    std::fs::write(&bad, "4 3\n0 2 1\n").unwrap();
    assert_eq!(exec(&["check", "-f", path_str(&bad), "--pattern", "path:3"]).0, 2);
    assert_eq!(exec(&["frobnicate"]).0, 2);
    assert_eq!(exec(&["contains", "-f", "/nonexistent/x.hg", "--pattern", "path:3"]).0, 2);
    let good = dir.path().join("g.hg");
    std::fs::write(&good, "4 3\n0 1 2\n").unwrap();
    let (code, _, err) = exec(&["contains", "-f", path_str(&good), "--pattern", "wheel:3"]);
    assert_eq!(code, 2);
    assert!(err.contains("wheel"));
    assert_eq!(exec(&["gen", "path-tree", "-k", "3"]).0, 2);
    assert_eq!(exec(&["check", "-f", path_str(&good), "--pattern", "path:3", "--timeout", "-1"]).0, 2);
    assert_eq!(exec(&["--help"]).0, 0);
}

#[test]
fn guard_errors_exit_three() {
    assert_eq!(exec(&["gen", "path-tree", "-k", "5", "-m", "12"]).0, 3);
    assert_eq!(exec(&["gen", "star-tightcycle", "-k", "3", "-n", "8"]).0, 3);
    assert_eq!(exec(&["formula", "akm", "-k", "3", "-m", "400"]).0, 3);
    assert_eq!(exec(&["oracle", "trees", "-k", "3", "-t", "9"]).0, 3);
    assert_eq!(exec(&["formula", "path-bounds", "-k", "3", "-m", "10", "-n", "31"]).0, 3);
}

#[test]
fn timeout_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.hg");
    exec(&["gen", "path-tree", "-k", "4", "-m", "12", "-o", path_str(&t)]);
    assert_eq!(exec(&["check", "-f", path_str(&t), "--pattern", "path:12", "--timeout", "0"]).0, 4);
}

#[test]
fn general_patterns_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let pat = dir.path().join("paw.txt");
    std::fs::write(&pat, "# triangle with a pendant\n4\n0 1\n1 2\n0 2\n2 3\n").unwrap();
    let h = dir.path().join("h.hg");
    std::fs::write(&h, "5 3\n0 1 2\n0 1 3\n1 2 3\n2 3 4\n").unwrap();
    let spec = format!("general:{}", path_str(&pat));
    assert_eq!(exec(&["contains", "-f", path_str(&h), "--pattern", &spec]).0, 0);
    assert_eq!(exec(&["contains", "-f", path_str(&h), "--pattern", &spec, "--required", "0,1,2"]).0, 0);
}

#[test]
fn formula_and_oracle_reports() {
    let (code, out, _) = exec(&["formula", "akm", "-k", "3", "-m", "10"]);
    assert_eq!(code, 0);
    let doc: ReportDocument = serde_json::from_str(&out).unwrap();
    assert_eq!((doc.tool.as_str(), doc.result.as_u64()), ("bergesat", Some(15)));
    assert_eq!(doc.parameters["k"], 3);
    let (code, out, _) = exec(&["formula", "cycle-upper", "-k", "3", "-m", "6", "-n", "17"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"upper\": 26"));
    let (code, out, _) = exec(&["oracle", "sat", "-k", "3", "-n", "4", "--pattern", "triangle"]);
    assert_eq!(code, 0);
    let doc: ReportDocument = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.result["minimum"], 2);
    let (code, out, _) = exec(&["oracle", "trees", "-k", "3", "-t", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"classes\": 2"));
    assert_eq!(exec(&["oracle", "min-tree", "-k", "3", "-m", "4", "--max-edges", "4"]).0, 0);
}

#[test]
fn workers_env_sets_default() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.hg");
    exec(&["gen", "path-tree", "-k", "3", "-m", "8", "-o", path_str(&t)]);
    std::env::set_var("BERGESAT_WORKERS", "3");
    let (code, out, _) = exec(&["check", "-f", path_str(&t), "--pattern", "path:8"]);
    std::env::remove_var("BERGESAT_WORKERS");
    assert_eq!((code, out.as_str()), (0, "SATURATED\n"));
}

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..=4, 0usize..=9)
        .prop_flat_map(|(k, extra)| {
            let n = k + extra;
            (Just(n), Just(k), proptest::collection::vec(proptest::collection::btree_set(0..n, k), 0..12))
        })
        .prop_map(|(n, k, sets)| {
            let mut edges: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
            edges.sort();
            edges.dedup();
            Hypergraph::new(n, k, edges).unwrap()
        })
}

proptest! {
    #[test]
    fn file_format_round_trips(h in arb_hypergraph()) {
        let text = write_hypergraph(&h);
        prop_assert_eq!(parse_hypergraph(&text).unwrap(), h.clone());
        let json = serde_json::to_string(&h).unwrap();
        prop_assert_eq!(serde_json::from_str::<Hypergraph>(&json).unwrap(), h);
    }

    #[test]
    fn parser_never_panics(text in "[0-9 #\\n]{0,40}") {
        let _ = parse_hypergraph(&text);
    }

    #[test]
    fn parser_rejects_what_make_rejects(n in 3usize..8, a in 0usize..9, b in 0usize..9, c in 0usize..9) {
        let text = format!("{n} 3\n{a} {b} {c}\n");
        let made = Hypergraph::new(n, 3, [[a, b, c]]);
        let parsed = parse_hypergraph(&text);
        if made.is_err() {
            prop_assert!(parsed.is_err());
        }
        if let Ok(h) = parsed {
            prop_assert_eq!(Ok(h), made);
        }
    }
}

//! Acceptance matrix. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

#[path = "common/mod.rs"]
mod common;

use std::time::Instant;

use bergesat::builders::*;
use bergesat::cli::report::saturation_document;
use bergesat::formulas::{a_km, closed_form, construction_edge_count, h_edge_count, sat_path_bounds, Family};
use bergesat::oracle::sat_exhaustive;
use bergesat::{contains_berge, is_berge_saturated, verify_embedding, Hypergraph, PatternGraph};
use common::{naive_contains, random_hypergraph, small_patterns};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn saturated(h: &Hypergraph, f: &PatternGraph, workers: usize) -> bool {
    is_berge_saturated(h, f, workers).saturated
}

const TREE_GRID: [(usize, std::ops::RangeInclusive<usize>); 4] = [(3, 8..=14), (4, 10..=14), (6, 8..=14), (7, 8..=14)];

/// a(k, m) where the closed form is stated, the construction count below it.
fn tree_count(k: usize, m: usize) -> Option<u64> {
    a_km(k as u64, m as u64)
        .or_else(|_| construction_edge_count(k as u64, m as u64))
        .ok()
}

fn tree_edge_counts() -> Check {
    let mut checked = 0;
    for (k, ms) in TREE_GRID {
        for m in ms {
            let Some(want) = tree_count(k, m).filter(|&a| a <= 64) else { continue };
            let t = build_path_tree(k, m).map_err(|e| format!("({k},{m}): {e}"))?;
            ensure(t.edge_count() as u64 == want, || format!("({k},{m}): {} edges, want {want}", t.edge_count()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} trees"))
}

const CRITERION_TWO: [(usize, usize); 4] = [(3, 10), (3, 11), (4, 10), (6, 10)];

/// Criterion 2 runs, kept as report bytes for the determinism check.
fn tree_saturation(workers: usize) -> Result<Vec<String>, String> {
    CRITERION_TWO
        .iter()
        .map(|&(k, m)| {
            let t = build_path_tree(k, m).map_err(|e| e.to_string())?;
            let f = PatternGraph::Path(m);
            let r = is_berge_saturated(&t, &f, workers);
            ensure(r.saturated, || format!("T({k},{m}) not saturated: {:?}", r.violation))?;
            Ok(saturation_document(&t, &f, &r).to_json())
        })
        .collect()
}

fn h_saturation() -> Check {
    for n in [31, 33, 62] {
        let h = build_path_saturated(3, 10, n).map_err(|e| e.to_string())?;
        let want = h_edge_count(3, 10, n as u64).map_err(|e| e.to_string())?;
        ensure(h.edge_count() as u64 == want, || format!("n={n}: {} edges, want {want}", h.edge_count()))?;
        ensure(saturated(&h, &PatternGraph::Path(10), 4), || format!("n={n} not saturated"))?;
    }
    Ok("n = 31, 33, 62".into())
}

fn triangle() -> Check {
    for n in [4, 5] {
        let found = sat_exhaustive(3, n, &PatternGraph::Triangle).map_err(|e| e.to_string())?.minimum;
        let formula = closed_form(Family::Triangle, 3, n as u64).map_err(|e| e.to_string())?.upper;
        ensure(found == Some(2) && formula == Some(2), || format!("n={n}: search {found:?}, formula {formula:?}"))?;
    }
    for (k, n) in (4..=12).map(|n| (3, n)).chain([(4, 12)]) {
        let h = build_triangle_star(k, n).map_err(|e| e.to_string())?;
        ensure(saturated(&h, &PatternGraph::Triangle, 1), || format!("star ({k},{n}) not saturated"))?;
    }
    Ok("sat = 2 at n = 4, 5; stars saturated".into())
}

fn matching() -> Check {
    let found = sat_exhaustive(3, 6, &PatternGraph::Matching(2)).map_err(|e| e.to_string())?.minimum;
    let formula = closed_form(Family::Matching(2), 3, 6).map_err(|e| e.to_string())?.upper;
    ensure(found == Some(1) && formula == Some(1), || format!("search {found:?}, formula {formula:?}"))?;
    for (k, l, n) in [(3, 3, 9), (3, 4, 12)] {
        let h = build_matching(k, l, n).map_err(|e| e.to_string())?;
        ensure(saturated(&h, &PatternGraph::Matching(l), 1), || format!("({k},{l},{n}) not saturated"))?;
    }
    Ok("sat = 1 at n = 6".into())
}

fn stars() -> Check {
    let tc = build_star_tightcycle(3, 9).map_err(|e| e.to_string())?;
    let r = is_berge_saturated(&tc, &PatternGraph::Star(4), 1);
    ensure(tc.edge_count() == 7 && r.saturated && r.scanned == 77, || {
        format!("tight cycle: {} edges, saturated {}, scanned {}", tc.edge_count(), r.saturated, r.scanned)
    })?;
    let sc = build_star_cliques(3, 4, 14).map_err(|e| e.to_string())?;
    let bound = closed_form(Family::StarUpper(4), 3, 14).map_err(|e| e.to_string())?.upper;
    ensure(sc.edge_count() == 12 && bound == Some(16), || format!("cliques: {} edges, bound {bound:?}", sc.edge_count()))?;
    ensure(saturated(&sc, &PatternGraph::Star(4), 1), || "cliques not saturated".into())?;
    Ok("7 and 12 edges".into())
}

fn cycles() -> Check {
    let cases = [
        (build_cycle_book(3, 4, 7), 4, 5),
        (build_cycle_cliques_keq(5, 26), 5, 33),
        (build_cycle_cliques(3, 6, 17), 6, 26),
    ];
    for (h, m, want) in cases {
        let h = h.map_err(|e| e.to_string())?;
        ensure(h.edge_count() == want, || format!("C_{m}: {} edges, want {want}", h.edge_count()))?;
        ensure(saturated(&h, &PatternGraph::Cycle(m), 4), || format!("C_{m} construction not saturated"))?;
    }
    Ok("5, 33, 26 edges".into())
}

fn oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut instances = 0;
    for _ in 0..500 {
        let n = rng.gen_range(3..=8);
        let h = random_hypergraph(&mut rng, n, 3, 6);
        for f in small_patterns() {
            let got = contains_berge(&h, &f, None);
            ensure(got.is_some() == naive_contains(&h, &f), || format!("disagree on {h:?} {f:?}"))?;
            if let Some(emb) = got {
                ensure(verify_embedding(&h, &f, &emb), || format!("bad witness on {h:?} {f:?}"))?;
            }
            instances += 1;
        }
    }
    Ok(format!("{instances} instances"))
}

fn figure_one() -> Check {
    let h = figure_one_fixture();
    ensure(contains_berge(&h, &PatternGraph::Path(5), None).is_some(), || "no P5".into())?;
    ensure(contains_berge(&h, &PatternGraph::Path(6), None).is_none(), || "has P6".into())?;
    Ok("P5 yes, P6 no".into())
}

fn bound_gap() -> Check {
    let mut checked = 0;
    for (k, ms) in TREE_GRID {
        for m in ms {
            let Ok(a) = a_km(k as u64, m as u64) else { continue };
            if a > 64 {
                continue;
            }
            let start = (k as u64 - 1) * a + k as u64 - 1;
            for n in start..start + 500 {
                let b = sat_path_bounds(k as u64, m as u64, n).map_err(|e| format!("({k},{m},{n}): {e}"))?;
                let (lo, hi) = (b.lower.unwrap_or(0), b.upper.unwrap_or(u64::MAX));
                ensure(lo <= hi && hi - lo <= 3, || format!("({k},{m},{n}): {lo}..{hi}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} triples"))
}

fn main() {
    let mut failed = 0;
    let mut report = |id: usize, name: &str, check: Check, started: Instant| {
        let secs = started.elapsed().as_secs_f64();
        match check {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id:>2} {name}: {why} ({secs:.2}s)");
            }
        }
    };

    let t = Instant::now();
    report(1, "tree edge counts", tree_edge_counts(), t);

    let t = Instant::now();
    let runs: Vec<Result<Vec<String>, String>> = [1, 2, 8].into_iter().map(tree_saturation).collect();
    let second = match &runs[0] {
        Ok(_) => Ok(format!("{:?} saturated", CRITERION_TWO)),
        Err(e) => Err(e.clone()),
    };
    report(2, "tree saturation", second, t);

    let t = Instant::now();
    report(3, "H(k,m,n) saturation", h_saturation(), t);
    let t = Instant::now();
    report(4, "triangle", triangle(), t);
    let t = Instant::now();
    report(5, "matching", matching(), t);
    let t = Instant::now();
    report(6, "stars", stars(), t);
    let t = Instant::now();
    report(7, "cycles", cycles(), t);
    let t = Instant::now();
    report(8, "matcher vs naive oracle", oracle_equivalence(), t);
    let t = Instant::now();
    report(9, "figure one fixture", figure_one(), t);
    let t = Instant::now();
    report(10, "path bound gap", bound_gap(), t);

    let t = Instant::now();
    let determinism = match (&runs[0], &runs[1], &runs[2]) {
        (Ok(a), Ok(b), Ok(c)) if a == b && a == c => Ok("workers 1, 2, 8 agree byte for byte".into()),
        (Ok(_), Ok(_), Ok(_)) => Err("reports differ across worker counts".into()),
        _ => Err("some run failed".into()),
    };
    report(11, "parallel determinism", determinism, t);

    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

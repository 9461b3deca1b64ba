//! Brute-force ground truth on tiny instances.
//!
//! Linear trees are grown one pendant edge at a time and deduplicated by
//! canonical code. Saturation numbers are found by scanning labeled
//! hypergraphs in order of edge count, so the first saturated one is minimal.
//! Guards are hard errors; a search either finishes or refuses to start.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::berge::PatternGraph;
use crate::canon::{canonical_code, canonical_form, MAX_CANON_VERTICES};
use crate::error::{Error, Result};
use crate::hypergraph::{advance_combination, binomial, Hypergraph};
use crate::satcheck::is_berge_saturated;

pub const MAX_TREE_EDGES: usize = 8;

/// Labeled hypergraphs a single [`sat_exhaustive`] call may examine.
pub const SUBSET_BUDGET: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub minimum: Option<u64>,
    pub witness: Option<Hypergraph>,
    /// Candidates examined: tree classes for [`min_saturated_tree`], labeled
    /// hypergraphs for [`sat_exhaustive`].
    pub examined: u64,
    pub exhausted: bool,
}

/// One k-uniform linear tree with `t` edges per isomorphism class, each in
/// canonical labeling, ordered by canonical code.
pub fn enumerate_linear_trees(k: usize, t: usize) -> Result<Vec<Hypergraph>> {
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    if t > MAX_TREE_EDGES || (k - 1) * t + 1 > MAX_CANON_VERTICES {
        return Err(Error::TooLarge(format!(
            "tree enumeration supports at most {MAX_TREE_EDGES} edges and {MAX_CANON_VERTICES} vertices"
        )));
    }
    let mut level = vec![Hypergraph::empty(1, k)?];
    for _ in 0..t {
        let mut next: BTreeMap<Vec<u8>, Hypergraph> = BTreeMap::new();
        for tree in &level {
            let n = tree.vertex_count();
            for v in 0..n {
                let mut edge = vec![v];
                edge.extend(n..n + k - 1);
                let mut edges = tree.edges().to_vec();
                edges.push(edge);
                let grown = Hypergraph::new(n + k - 1, k, edges)?;
                let (code, perm) = canonical_form(&grown)?;
                next.entry(code.0).or_insert_with(|| relabel(&grown, &perm));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

fn relabel(h: &Hypergraph, perm: &[usize]) -> Hypergraph {
    Hypergraph::new(
        h.vertex_count(),
        h.uniformity(),
        h.edges().iter().map(|e| e.iter().map(|&v| perm[v]).collect::<Vec<_>>()),
    )
    .expect("relabeling preserves validity")
}

/// The fewest edges of a Berge-P_m-saturated linear tree on at least k + 1
/// vertices, searching trees with up to `max_edges` edges.
pub fn min_saturated_tree(k: usize, m: usize, max_edges: usize) -> Result<SearchResult> {
    let pattern = PatternGraph::Path(m);
    pattern.validate()?;
    let mut examined = 0;
    for t in 2..=max_edges {
        for tree in enumerate_linear_trees(k, t)? {
            examined += 1;
            if is_berge_saturated(&tree, &pattern, 1).saturated {
                return Ok(SearchResult {
                    minimum: Some(t as u64),
                    witness: Some(tree),
                    examined,
                    exhausted: true,
                });
            }
        }
    }
    Ok(SearchResult {
        minimum: None,
        witness: None,
        examined,
        exhausted: true,
    })
}

/// sat_k(n, Berge-f) by scanning labeled hypergraphs by increasing edge
/// count, skipping isomorphic repeats.
pub fn sat_exhaustive(k: usize, n: usize, f: &PatternGraph) -> Result<SearchResult> {
    f.validate()?;
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooLarge(format!("at most {MAX_CANON_VERTICES} vertices")));
    }
    let all = Hypergraph::empty(n, k)?.complement_edges().collect::<Vec<_>>();
    let total = all.len();
    let mut examined = 0u64;
    for size in 0..=total {
        let labeled = binomial(total as u64, size as u64).unwrap_or(u64::MAX);
        if examined.saturating_add(labeled) > SUBSET_BUDGET {
            return Err(Error::TooLarge(format!(
                "more than {SUBSET_BUDGET} labeled hypergraphs before finding a saturated one (edge count {size})"
            )));
        }
        let mut seen = HashSet::new();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            examined += 1;
            let h = Hypergraph::new(n, k, idx.iter().map(|&i| &all[i]))?;
            if seen.insert(canonical_code(&h)?) && is_berge_saturated(&h, f, 1).saturated {
                return Ok(SearchResult {
                    minimum: Some(size as u64),
                    witness: Some(h),
                    examined,
                    exhausted: true,
                });
            }
            if size == 0 || !advance_combination(&mut idx, total) {
                break;
            }
        }
    }
    Ok(SearchResult {
        minimum: None,
        witness: None,
        examined,
        exhausted: true,
    })
}

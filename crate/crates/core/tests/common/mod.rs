//! Slow, obviously-correct reference implementations for cross-checking.
#![allow(dead_code)]

use bergesat::{Hypergraph, PatternGraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Tries every injective vertex map, then every assignment of distinct
/// hyperedges to pattern edges.
pub fn naive_contains(h: &Hypergraph, f: &PatternGraph) -> bool {
    let pv = f.vertex_count();
    let edges = f.edges();
    if pv > h.vertex_count() {
        return false;
    }
    let mut map = Vec::with_capacity(pv);
    let mut used = vec![false; h.vertex_count()];
    injections(h, &edges, pv, &mut map, &mut used)
}

fn injections(h: &Hypergraph, edges: &[(usize, usize)], pv: usize, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if map.len() == pv {
        let mut taken = vec![false; h.edge_count()];
        return assign(h, edges, map, 0, &mut taken);
    }
    for v in 0..h.vertex_count() {
        if !used[v] {
            used[v] = true;
            map.push(v);
            let hit = injections(h, edges, pv, map, used);
            map.pop();
            used[v] = false;
            if hit {
                return true;
            }
        }
    }
    false
}

fn assign(h: &Hypergraph, edges: &[(usize, usize)], map: &[usize], i: usize, taken: &mut [bool]) -> bool {
    let Some(&(a, b)) = edges.get(i) else {
        return true;
    };
    for (j, e) in h.edges().iter().enumerate() {
        if !taken[j] && e.contains(&map[a]) && e.contains(&map[b]) {
            taken[j] = true;
            let hit = assign(h, edges, map, i + 1, taken);
            taken[j] = false;
            if hit {
                return true;
            }
        }
    }
    false
}

pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Free, and every added k-set creates a copy.
pub fn naive_saturated(h: &Hypergraph, f: &PatternGraph) -> bool {
    !naive_contains(h, f)
        && k_subsets(h.vertex_count(), h.uniformity())
            .iter()
            .filter(|e| !h.contains_edge(e))
            .all(|e| naive_contains(&h.with_edge(e).unwrap(), f))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

pub fn relabel(h: &Hypergraph, perm: &[usize]) -> Hypergraph {
    Hypergraph::new(
        h.vertex_count(),
        h.uniformity(),
        h.edges().iter().map(|e| e.iter().map(|&v| perm[v]).collect::<Vec<_>>()),
    )
    .unwrap()
}

/// Tries every vertex permutation; fine up to about 9 vertices.
pub fn brute_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.uniformity() != b.uniformity() || a.edge_count() != b.edge_count() {
        return false;
    }
    permutations(a.vertex_count()).iter().any(|p| relabel(a, p) == *b)
}

pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, k: usize, max_edges: usize) -> Hypergraph {
    let mut all = k_subsets(n, k);
    all.shuffle(rng);
    let count = rng.gen_range(0..=max_edges.min(all.len()));
    Hypergraph::new(n, k, &all[..count]).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// The patterns of the random equivalence suite.
pub fn small_patterns() -> Vec<PatternGraph> {
    vec![
        PatternGraph::Path(3),
        PatternGraph::Path(4),
        PatternGraph::Cycle(3),
        PatternGraph::Cycle(4),
        PatternGraph::Star(2),
        PatternGraph::Star(3),
        PatternGraph::Matching(2),
    ]
}

//! Berge paths and cycles as alternating vertex/edge sequences.
//!
//! Every search is anchored at a required hyperedge r. A path through r is a
//! backward arm ending at x, then r, then a forward arm starting at y, for
//! some ordered pair x != y in r. A cycle through r is a path from y back to
//! x of m-1 edges. Searching for a copy anywhere is done by anchoring at each
//! edge in turn with all lower-indexed edges banned.

use super::{embedding_from_indices, BergeEmbedding, Host, Scope};
use crate::hypergraph::Hypergraph;

/// DFS nodes spent per start vertex before a reach bound gives up and
/// reports the cap.
const REACH_BUDGET: usize = 200_000;

/// Upper bounds on the longest Berge path starting at each vertex, capped at
/// `cap`. Exact unless the budget runs out.
fn reach_bounds(h: &Hypergraph, cap: usize) -> Vec<usize> {
    struct Dfs<'a> {
        h: &'a Hypergraph,
        cap: usize,
        used_v: Vec<bool>,
        used_e: Vec<bool>,
        budget: usize,
    }
    impl Dfs<'_> {
        fn longest(&mut self, u: usize, len: usize) -> usize {
            if len >= self.cap || self.budget == 0 {
                return self.cap;
            }
            self.budget -= 1;
            let mut best = len;
            let h = self.h;
            for &f in h.incident(u) {
                if self.used_e[f] {
                    continue;
                }
                self.used_e[f] = true;
                for &w in h.edge(f) {
                    if self.used_v[w] {
                        continue;
                    }
                    self.used_v[w] = true;
                    best = best.max(self.longest(w, len + 1));
                    self.used_v[w] = false;
                    if best >= self.cap {
                        break;
                    }
                }
                self.used_e[f] = false;
                if best >= self.cap {
                    break;
                }
            }
            best
        }
    }
    let mut dfs = Dfs {
        h,
        cap,
        used_v: vec![false; h.vertex_count()],
        used_e: vec![false; h.edge_count()],
        budget: 0,
    };
    (0..h.vertex_count())
        .map(|v| {
            dfs.budget = REACH_BUDGET;
            dfs.used_v[v] = true;
            let r = dfs.longest(v, 0);
            dfs.used_v[v] = false;
            r
        })
        .collect()
}

/// Berge paths with exactly `t` edges.
pub(crate) struct PathSearch {
    t: usize,
    reach: Vec<usize>,
    used_v: Vec<bool>,
    used_e: Vec<bool>,
    back: Vec<(usize, usize)>,
    fwd: Vec<(usize, usize)>,
    pairs: Vec<(usize, usize, usize)>,
    anchor: (usize, usize, usize),
}

impl PathSearch {
    pub fn new(h: &Hypergraph, t: usize) -> Self {
        Self::with_cap(h, t, t)
    }

    fn with_cap(h: &Hypergraph, t: usize, cap: usize) -> Self {
        PathSearch {
            t,
            reach: reach_bounds(h, cap),
            used_v: vec![false; h.vertex_count()],
            used_e: vec![false; h.edge_count() + 1],
            back: Vec::new(),
            fwd: Vec::new(),
            pairs: Vec::new(),
            anchor: (0, 0, 0),
        }
    }

    pub fn find(&mut self, host: &Host<'_>, required: Option<usize>) -> Option<BergeEmbedding> {
        let hit = match required {
            Some(r) => self.through(host, Scope::through(r)),
            None => (0..host.edge_count()).any(|r| {
                self.through(
                    host,
                    Scope {
                        required: Some(r),
                        allowed_from: r + 1,
                    },
                )
            }),
        };
        hit.then(|| self.embedding(host))
    }

    /// Searches for a path through `scope.required`. On success the trail is
    /// left in the scratch stacks for [`PathSearch::embedding`].
    pub fn through(&mut self, host: &Host<'_>, scope: Scope) -> bool {
        let rq = scope.required.expect("anchored search");
        let r = host.edge(rq);
        let need = self.t - 1;
        self.pairs.clear();
        for &x in r {
            for &y in r {
                let s = self.reach[x] + self.reach[y];
                if x != y && s >= need {
                    self.pairs.push((s, x, y));
                }
            }
        }
        self.pairs.sort_unstable_by_key(|p| std::cmp::Reverse(p.0));
        self.used_e[rq] = true;
        let mut found = false;
        for i in 0..self.pairs.len() {
            let (_, x, y) = self.pairs[i];
            self.used_v[x] = true;
            self.used_v[y] = true;
            self.back.clear();
            self.fwd.clear();
            found = self.back_arm(host, scope, x, 0, y, need);
            self.used_v[x] = false;
            self.used_v[y] = false;
            if found {
                self.anchor = (x, rq, y);
                for &(f, w) in self.back.iter().chain(&self.fwd) {
                    self.used_e[f] = false;
                    self.used_v[w] = false;
                }
                break;
            }
        }
        self.used_e[rq] = false;
        found
    }

    fn back_arm(&mut self, host: &Host<'_>, scope: Scope, u: usize, b: usize, y: usize, need: usize) -> bool {
        if b + self.reach[y] >= need && self.fwd_arm(host, scope, y, 0, need - b) {
            return true;
        }
        if b == need || b + self.reach[u] + self.reach[y] < need {
            return false;
        }
        for f in host.incident(u) {
            if !scope.side(f) || self.used_e[f] {
                continue;
            }
            self.used_e[f] = true;
            for &w in host.edge(f) {
                if self.used_v[w] {
                    continue;
                }
                self.used_v[w] = true;
                self.back.push((f, w));
                if self.back_arm(host, scope, w, b + 1, y, need) {
                    return true;
                }
                self.back.pop();
                self.used_v[w] = false;
            }
            self.used_e[f] = false;
        }
        false
    }

    fn fwd_arm(&mut self, host: &Host<'_>, scope: Scope, u: usize, a: usize, want: usize) -> bool {
        if a == want {
            return true;
        }
        if a + self.reach[u] < want {
            return false;
        }
        for f in host.incident(u) {
            if !scope.side(f) || self.used_e[f] {
                continue;
            }
            self.used_e[f] = true;
            for &w in host.edge(f) {
                if self.used_v[w] {
                    continue;
                }
                self.used_v[w] = true;
                self.fwd.push((f, w));
                if self.fwd_arm(host, scope, w, a + 1, want) {
                    return true;
                }
                self.fwd.pop();
                self.used_v[w] = false;
            }
            self.used_e[f] = false;
        }
        false
    }

    /// The trail of the last successful [`PathSearch::through`].
    pub fn embedding(&self, host: &Host<'_>) -> BergeEmbedding {
        let (x, rq, y) = self.anchor;
        let mut vertices: Vec<usize> = self.back.iter().rev().map(|&(_, w)| w).collect();
        let mut edges: Vec<usize> = self.back.iter().rev().map(|&(f, _)| f).collect();
        vertices.extend([x, y]);
        edges.push(rq);
        vertices.extend(self.fwd.iter().map(|&(_, w)| w));
        edges.extend(self.fwd.iter().map(|&(f, _)| f));
        embedding_from_indices(host, vertices, &edges)
    }
}

/// Berge cycles of length `m`.
pub(crate) struct CycleSearch {
    m: usize,
    n: usize,
    /// Vertex distances in the base hypergraph; empty when n is too large
    /// to tabulate, which disables the distance pruning.
    dist: Vec<u8>,
    used_v: Vec<bool>,
    used_e: Vec<bool>,
    stack: Vec<(usize, usize)>,
    anchor: (usize, usize),
}

const MAX_DIST_TABLE: usize = 512;

impl CycleSearch {
    pub fn new(h: &Hypergraph, m: usize) -> Self {
        let n = h.vertex_count();
        let dist = if n <= MAX_DIST_TABLE { distances(h) } else { Vec::new() };
        CycleSearch {
            m,
            n,
            dist,
            used_v: vec![false; n],
            used_e: vec![false; h.edge_count() + 1],
            stack: Vec::new(),
            anchor: (0, 0),
        }
    }

    #[inline]
    fn far(&self, a: usize, b: usize, budget: usize) -> bool {
        !self.dist.is_empty() && self.dist[a * self.n + b] as usize > budget
    }

    pub fn find(&mut self, host: &Host<'_>, required: Option<usize>) -> Option<BergeEmbedding> {
        let hit = match required {
            Some(r) => self.through(host, Scope::through(r)),
            None => (0..host.edge_count()).any(|r| {
                self.through(
                    host,
                    Scope {
                        required: Some(r),
                        allowed_from: r + 1,
                    },
                )
            }),
        };
        hit.then(|| self.embedding(host))
    }

    pub fn through(&mut self, host: &Host<'_>, scope: Scope) -> bool {
        let rq = scope.required.expect("anchored search");
        let r = host.edge(rq);
        let arm = self.m - 1;
        self.used_e[rq] = true;
        let mut found = false;
        'pairs: for (i, &x) in r.iter().enumerate() {
            for &y in &r[i + 1..] {
                if self.far(y, x, arm) {
                    continue;
                }
                self.used_v[x] = true;
                self.used_v[y] = true;
                self.stack.clear();
                found = self.arm(host, scope, y, x, arm);
                self.used_v[x] = false;
                self.used_v[y] = false;
                if found {
                    self.anchor = (y, rq);
                    for &(f, w) in &self.stack {
                        self.used_e[f] = false;
                        self.used_v[w] = false;
                    }
                    break 'pairs;
                }
            }
        }
        self.used_e[rq] = false;
        found
    }

    /// Extends from `u` to `x` with exactly `left` more side edges.
    fn arm(&mut self, host: &Host<'_>, scope: Scope, u: usize, x: usize, left: usize) -> bool {
        for f in host.incident(u) {
            if !scope.side(f) || self.used_e[f] {
                continue;
            }
            if left == 1 {
                if host.contains(f, x) {
                    self.stack.push((f, x));
                    return true;
                }
                continue;
            }
            self.used_e[f] = true;
            for &w in host.edge(f) {
                if self.used_v[w] || self.far(w, x, left - 1) {
                    continue;
                }
                self.used_v[w] = true;
                self.stack.push((f, w));
                if self.arm(host, scope, w, x, left - 1) {
                    return true;
                }
                self.stack.pop();
                self.used_v[w] = false;
            }
            self.used_e[f] = false;
        }
        false
    }

    pub fn embedding(&self, host: &Host<'_>) -> BergeEmbedding {
        let (y, rq) = self.anchor;
        let mut vertices = vec![y];
        vertices.extend(self.stack.iter().map(|&(_, w)| w));
        let mut edges: Vec<usize> = self.stack.iter().map(|&(f, _)| f).collect();
        edges.push(rq);
        embedding_from_indices(host, vertices, &edges)
    }
}

/// All-pairs distances (in edges) of the vertex graph, saturating at 255.
fn distances(h: &Hypergraph) -> Vec<u8> {
    let n = h.vertex_count();
    let mut dist = vec![u8::MAX; n * n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let d = row[u];
            for &f in h.incident(u) {
                for &w in h.edge(f) {
                    if row[w] == u8::MAX {
                        row[w] = d.saturating_add(1).min(u8::MAX - 1);
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    dist
}

/// The longest Berge path, optionally through `required_edge` and/or
/// starting at `start_vertex`, with a witness for `Path(length + 1)`.
///
/// An edgeless hypergraph (or an impossible constraint) gives length 0 and an
/// empty witness.
pub fn longest_berge_path(
    h: &Hypergraph,
    required_edge: Option<&[usize]>,
    start_vertex: Option<usize>,
) -> (usize, BergeEmbedding) {
    let required = match required_edge {
        Some(e) => match h.edge_index(e) {
            Some(i) => Some(i),
            None => return (0, BergeEmbedding::default()),
        },
        None => None,
    };
    if h.edge_count() == 0 || start_vertex.is_some_and(|s| s >= h.vertex_count()) {
        return (0, BergeEmbedding::default());
    }
    let host = Host::plain(h);
    if let Some(s) = start_vertex {
        return RootedLongest::run(h, s, required);
    }
    let mut search = PathSearch::with_cap(h, 1, h.edge_count());
    let mut best = (0, BergeEmbedding::default());
    for t in 1..=h.edge_count() {
        search.t = t;
        match search.find(&host, required) {
            Some(emb) => best = (t, emb),
            None => break,
        }
    }
    best
}

/// Exhaustive branch-and-bound from a fixed start vertex.
struct RootedLongest<'a> {
    h: &'a Hypergraph,
    required: Option<usize>,
    reach: Vec<usize>,
    used_v: Vec<bool>,
    used_e: Vec<bool>,
    trail: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
    best_len: Option<usize>,
}

impl RootedLongest<'_> {
    fn run(h: &Hypergraph, s: usize, required: Option<usize>) -> (usize, BergeEmbedding) {
        let mut search = RootedLongest {
            h,
            required,
            reach: reach_bounds(h, h.edge_count()),
            used_v: vec![false; h.vertex_count()],
            used_e: vec![false; h.edge_count()],
            trail: Vec::new(),
            best: Vec::new(),
            best_len: None,
        };
        search.used_v[s] = true;
        search.dfs(s);
        let Some(len) = search.best_len.filter(|&l| l > 0) else {
            return (0, BergeEmbedding::default());
        };
        let mut vertices = vec![s];
        vertices.extend(search.best.iter().map(|&(_, w)| w));
        let edges: Vec<usize> = search.best.iter().map(|&(f, _)| f).collect();
        (len, embedding_from_indices(&Host::plain(h), vertices, &edges))
    }

    fn dfs(&mut self, u: usize) {
        let len = self.trail.len();
        let valid = self.required.is_none_or(|r| self.used_e[r]);
        if valid && self.best_len.is_none_or(|b| len > b) {
            self.best_len = Some(len);
            self.best = self.trail.clone();
        }
        if self.best_len.is_some_and(|b| len + self.reach[u] <= b) {
            return;
        }
        let h = self.h;
        for &f in h.incident(u) {
            if self.used_e[f] {
                continue;
            }
            self.used_e[f] = true;
            for &w in h.edge(f) {
                if self.used_v[w] {
                    continue;
                }
                self.used_v[w] = true;
                self.trail.push((f, w));
                self.dfs(w);
                self.trail.pop();
                self.used_v[w] = false;
            }
            self.used_e[f] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::{verify_embedding, PatternGraph};

    fn loose_path(edges: usize) -> Hypergraph {
        Hypergraph::new(2 * edges + 1, 3, (0..edges).map(|i| [2 * i, 2 * i + 1, 2 * i + 2])).unwrap()
    }

    #[test]
    fn single_edge_longest_is_one() {
        let h = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(longest_berge_path(&h, None, None).0, 1);
    }

    #[test]
    fn loose_path_longest() {
        let h = loose_path(4);
        let (len, emb) = longest_berge_path(&h, None, None);
        assert_eq!(len, 4);
        assert!(verify_embedding(&h, &PatternGraph::Path(5), &emb));
    }

    #[test]
    fn edgeless_gives_zero() {
        let h = Hypergraph::empty(5, 3).unwrap();
        assert_eq!(longest_berge_path(&h, None, None), (0, BergeEmbedding::default()));
    }

    #[test]
    fn rooted_and_required_variants() {
        let h = loose_path(4);
        // from an endpoint the whole path is available
        let (len, emb) = longest_berge_path(&h, None, Some(0));
        assert_eq!(len, 4);
        assert_eq!(emb.vertex_map[0], 0);
        assert!(verify_embedding(&h, &PatternGraph::Path(5), &emb));
        // from the middle vertex only half of it
        assert_eq!(longest_berge_path(&h, None, Some(4)).0, 2);
        let (len, emb) = longest_berge_path(&h, Some(&[6, 7, 8]), Some(4));
        assert_eq!(len, 2);
        assert!(emb.edge_map.contains(&vec![6, 7, 8]));
        assert_eq!(longest_berge_path(&h, Some(&[0, 1, 2]), None).0, 4);
    }

    #[test]
    fn distance_table() {
        let h = loose_path(3);
        let d = distances(&h);
        let n = h.vertex_count();
        assert_eq!(d[6], 3);
        assert_eq!(d[n + 2], 1);
        assert_eq!(d[3 * n + 3], 0);
    }

    #[test]
    fn reach_is_exact_on_trees() {
        let h = loose_path(4);
        let reach = reach_bounds(&h, 10);
        assert_eq!(reach[0], 4);
        assert_eq!(reach[4], 2);
        assert_eq!(reach[3], 3);
    }
}

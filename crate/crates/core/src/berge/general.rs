//! Berge-F for an arbitrary simple graph F.
//!
//! Pattern vertices are placed one at a time (most constrained first). A
//! placement must share some hyperedge with the image of every placed
//! neighbour, and the pattern edges closed so far must admit a system of
//! distinct hosting hyperedges, checked by bipartite matching.

use super::{embedding_from_indices, BergeEmbedding, Host, Scope};
use crate::bipartite::max_matching;

struct State<'a, 'h> {
    host: &'a Host<'h>,
    scope: Scope,
    edges: &'a [(usize, usize)],
    order: Vec<usize>,
    /// Pattern neighbours of each pattern vertex.
    adj: Vec<Vec<usize>>,
    /// Pattern edges whose later endpoint (in `order`) is at each depth.
    closing: Vec<Vec<usize>>,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
    result: Option<Vec<usize>>,
}

pub(crate) fn search(
    host: &Host<'_>,
    vertices: usize,
    edges: &[(usize, usize)],
    scope: Scope,
) -> Option<BergeEmbedding> {
    if vertices > host.n() || (scope.required.is_some() && edges.is_empty()) {
        return None;
    }
    let mut adj = vec![Vec::new(); vertices];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let order = placement_order(&adj);
    let mut depth_of = vec![0; vertices];
    for (d, &p) in order.iter().enumerate() {
        depth_of[p] = d;
    }
    let mut closing = vec![Vec::new(); vertices];
    for (i, &(a, b)) in edges.iter().enumerate() {
        closing[depth_of[a].max(depth_of[b])].push(i);
    }
    let mut st = State {
        host,
        scope,
        edges,
        order,
        adj,
        closing,
        image: vec![None; vertices],
        used: vec![false; host.n()],
        result: None,
    };
    if !st.place(0) {
        return None;
    }
    let vertex_map = st.image.iter().map(|v| v.unwrap()).collect();
    Some(embedding_from_indices(host, vertex_map, &st.result.unwrap()))
}

/// Greedy: next is the vertex with most placed neighbours, then highest
/// degree, then lowest index.
fn placement_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], adj[v].len(), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &w in &adj[next] {
            links[w] += 1;
        }
    }
    order
}

impl State<'_, '_> {
    fn place(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.finish();
        }
        let p = self.order[depth];
        for u in 0..self.host.n() {
            if self.used[u] || !self.compatible(p, u) {
                continue;
            }
            self.used[u] = true;
            self.image[p] = Some(u);
            if self.feasible(depth) && self.place(depth + 1) {
                return true;
            }
            self.image[p] = None;
            self.used[u] = false;
        }
        false
    }

    fn compatible(&self, p: usize, u: usize) -> bool {
        self.adj[p].iter().all(|&q| match self.image[q] {
            None => true,
            Some(w) => self
                .host
                .incident(u)
                .any(|f| self.scope.usable(f) && self.host.contains(f, w)),
        })
    }

    /// Hosts usable for pattern edge `i`, optionally leaving one out.
    fn hosts(&self, i: usize, without: Option<usize>) -> Vec<usize> {
        let (a, b) = self.edges[i];
        let (ua, ub) = (self.image[a].unwrap(), self.image[b].unwrap());
        self.host
            .incident(ua)
            .filter(|&f| self.scope.usable(f) && Some(f) != without && self.host.contains(f, ub))
            .collect()
    }

    fn closed_edges(&self, depth: usize) -> Vec<usize> {
        self.closing[..=depth].iter().flatten().copied().collect()
    }

    fn feasible(&self, depth: usize) -> bool {
        if self.closing[depth].is_empty() {
            return true;
        }
        let closed = self.closed_edges(depth);
        let adj: Vec<Vec<usize>> = closed.iter().map(|&i| self.hosts(i, None)).collect();
        max_matching(&adj, self.host.edge_count()).size == closed.len()
    }

    fn finish(&mut self) -> bool {
        let all: Vec<usize> = (0..self.edges.len()).collect();
        let Some(r) = self.scope.required else {
            let adj: Vec<Vec<usize>> = all.iter().map(|&i| self.hosts(i, None)).collect();
            return self.assign(&all, &adj, None);
        };
        // pin r to each pattern edge it can host, match the rest elsewhere
        for &pinned in &all {
            let (a, b) = self.edges[pinned];
            let (ua, ub) = (self.image[a].unwrap(), self.image[b].unwrap());
            if !self.host.contains(r, ua) || !self.host.contains(r, ub) {
                continue;
            }
            let rest: Vec<usize> = all.iter().copied().filter(|&i| i != pinned).collect();
            let adj: Vec<Vec<usize>> = rest.iter().map(|&i| self.hosts(i, Some(r))).collect();
            if self.assign(&rest, &adj, Some((pinned, r))) {
                return true;
            }
        }
        false
    }

    fn assign(&mut self, pattern: &[usize], adj: &[Vec<usize>], pinned: Option<(usize, usize)>) -> bool {
        let matching = max_matching(adj, self.host.edge_count());
        if matching.size < pattern.len() {
            return false;
        }
        let mut hosts = vec![0; self.edges.len()];
        for (&i, m) in pattern.iter().zip(&matching.left) {
            hosts[i] = m.unwrap();
        }
        if let Some((i, r)) = pinned {
            hosts[i] = r;
        }
        self.result = Some(hosts);
        true
    }
}

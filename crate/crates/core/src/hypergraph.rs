//! Immutable k-uniform hypergraphs.
//!
//! Vertices are the integers `0..n`; vertices not covered by any edge are
//! isolated. Edges are stored as sorted vertex lists and the edge list itself
//! is sorted, so two hypergraphs with the same edge set compare equal.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
    /// Edge indices containing each vertex, ascending.
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a canonical hypergraph, rejecting malformed input.
    pub fn new<I, E>(n: usize, k: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        if k < 2 {
            return Err(Error::InvalidUniformity(k));
        }
        let mut sorted_edges = Vec::new();
        for edge in edges {
            let mut edge = edge.as_ref().to_vec();
            edge.sort_unstable();
            if edge.len() != k || edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::EdgeWrongSize { edge, k });
            }
            if let Some(&vertex) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            sorted_edges.push(edge);
        }
        sorted_edges.sort_unstable();
        if let Some(w) = sorted_edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }
        Ok(Self::from_sorted(n, k, sorted_edges))
    }

    /// The edgeless hypergraph on `n` vertices.
    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, std::iter::empty::<Vec<usize>>())
    }

    fn from_sorted(n: usize, k: usize, edges: Vec<Vec<usize>>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for (i, edge) in edges.iter().enumerate() {
            for &v in edge {
                incidence[v].push(i);
            }
        }
        Hypergraph {
            n,
            k,
            edges,
            incidence,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &[usize] {
        &self.edges[index]
    }

    /// Indices of the edges containing `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// Index of `edge` (given in any vertex order) if it is an edge.
    pub fn edge_index(&self, edge: &[usize]) -> Option<usize> {
        if edge.len() != self.k {
            return None;
        }
        let mut key = edge.to_vec();
        key.sort_unstable();
        self.edges.binary_search(&key).ok()
    }

    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        self.edge_index(edge).is_some()
    }

    /// Returns `h + e`. Fails if `e` is malformed or already present.
    pub fn with_edge(&self, edge: &[usize]) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push(edge.to_vec());
        Self::new(self.n, self.k, edges)
    }

    /// Every k-subset of the vertex set that is not an edge, in
    /// lexicographic order.
    pub fn complement_edges(&self) -> ComplementEdges<'_> {
        ComplementEdges {
            h: self,
            current: if self.k <= self.n {
                Some((0..self.k).collect())
            } else {
                None
            },
            cursor: 0,
        }
    }

    /// Vertex sets of the connected components, isolated vertices included,
    /// ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &e in &self.incidence[v] {
                    for &u in &self.edges[e] {
                        if !seen[u] {
                            seen[u] = true;
                            stack.push(u);
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True if every pair of edges shares at most one vertex.
    pub fn is_linear(&self) -> bool {
        let mut mark = vec![usize::MAX; self.edges.len()];
        for (i, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                for &j in &self.incidence[v] {
                    if j > i {
                        if mark[j] == i {
                            return false;
                        }
                        mark[j] = i;
                    }
                }
            }
        }
        true
    }

    /// Connected, linear, and `n = (k-1)|E| + 1`.
    pub fn is_linear_tree(&self) -> bool {
        self.n == (self.k - 1) * self.edges.len() + 1 && self.is_connected() && self.is_linear()
    }

    /// Edges with at least `k - 1` vertices of degree one.
    pub fn leaf_edges(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].iter().filter(|&&v| self.degree(v) == 1).count() + 1 >= self.k)
            .collect()
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("k", &self.k)
            .field("edges", &self.edges)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct Raw {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Raw {
            n: self.n,
            k: self.k,
            edges: self.edges.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Raw::deserialize(d)?;
        Hypergraph::new(raw.n, raw.k, raw.edges).map_err(serde::de::Error::custom)
    }
}

/// Lexicographic stream of the non-edges of a hypergraph.
pub struct ComplementEdges<'a> {
    h: &'a Hypergraph,
    current: Option<Vec<usize>>,
    /// Next edge of `h` not yet passed in lexicographic order.
    cursor: usize,
}

impl Iterator for ComplementEdges<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            let combo = self.current.as_mut()?;
            let out = combo.clone();
            if !advance_combination(combo, self.h.n) {
                self.current = None;
            }
            let edges = &self.h.edges;
            while self.cursor < edges.len() && edges[self.cursor] < out {
                self.cursor += 1;
            }
            if self.cursor < edges.len() && edges[self.cursor] == out {
                continue;
            }
            return Some(out);
        }
    }
}

/// Steps a strictly increasing index vector to its lexicographic successor
/// among the k-subsets of `0..n`. Returns false once exhausted.
pub(crate) fn advance_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exact binomial coefficient, `None` on overflow.
pub fn binomial(n: u64, r: u64) -> Option<u64> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

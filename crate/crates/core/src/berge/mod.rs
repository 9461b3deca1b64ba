//! Berge-F containment.
//!
//! A hypergraph contains a Berge copy of a graph F when F's vertices map
//! injectively into the hypergraph and F's edges map to distinct hyperedges,
//! each containing the images of its endpoints. Paths and cycles use a
//! sequence search, stars a per-centre bipartite matching, matchings a small
//! backtracking over pairs, and everything else a general vertex-embedding
//! search with matching-based pruning.

mod general;
mod matching;
mod sequence;
mod star;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub use sequence::longest_berge_path;

/// The simple graph F being expanded.
///
/// Vertex conventions: `Path(m)` has edges `(i, i+1)`; `Cycle(m)` adds
/// `(m-1, 0)`; `Star(m)` has centre 0 and leaves `1..=m`; `Matching(l)` pairs
/// `(2i, 2i+1)`; `Triangle` is `Cycle(3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternGraph {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Matching(usize),
    Triangle,
    General {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl PatternGraph {
    /// A validated arbitrary simple graph.
    pub fn general(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::EdgeWrongSize {
                    edge: vec![a, b],
                    k: 2,
                });
            }
            if let Some(&vertex) = [a, b].iter().find(|&&v| v >= vertices) {
                return Err(Error::VertexOutOfRange { vertex, n: vertices });
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::DuplicateEdge(vec![a.min(b), a.max(b)]));
            }
        }
        Ok(PatternGraph::General { vertices, edges })
    }

    /// Rejects degenerate family parameters (a cycle needs 3 vertices, a star
    /// or matching at least one edge, a path at least one vertex).
    pub fn validate(&self) -> Result<()> {
        let bad = match *self {
            PatternGraph::Path(m) => m < 1,
            PatternGraph::Cycle(m) => m < 3,
            PatternGraph::Star(m) | PatternGraph::Matching(m) => m < 1,
            _ => false,
        };
        if bad {
            Err(Error::ParameterRegime(format!("degenerate pattern {self:?}")))
        } else {
            Ok(())
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            PatternGraph::Path(m) | PatternGraph::Cycle(m) => m,
            PatternGraph::Star(m) => m + 1,
            PatternGraph::Matching(l) => 2 * l,
            PatternGraph::Triangle => 3,
            PatternGraph::General { vertices, .. } => vertices,
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            PatternGraph::Path(m) => (1..m).map(|i| (i - 1, i)).collect(),
            PatternGraph::Cycle(m) => (0..m).map(|i| (i, (i + 1) % m)).collect(),
            PatternGraph::Triangle => vec![(0, 1), (1, 2), (2, 0)],
            PatternGraph::Star(m) => (1..=m).map(|i| (0, i)).collect(),
            PatternGraph::Matching(l) => (0..l).map(|i| (2 * i, 2 * i + 1)).collect(),
            PatternGraph::General { ref edges, .. } => edges.clone(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match *self {
            PatternGraph::Path(m) => m.saturating_sub(1),
            PatternGraph::Cycle(m) => m,
            PatternGraph::Triangle => 3,
            PatternGraph::Star(m) | PatternGraph::Matching(m) => m,
            PatternGraph::General { ref edges, .. } => edges.len(),
        }
    }
}

/// A witness: `vertex_map[i]` is the image of pattern vertex `i` and
/// `edge_map[j]` the hyperedge hosting pattern edge `j` (in the order of
/// [`PatternGraph::edges`]).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BergeEmbedding {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<Vec<usize>>,
}

pub fn verify_embedding(h: &Hypergraph, f: &PatternGraph, emb: &BergeEmbedding) -> bool {
    let edges = f.edges();
    if emb.vertex_map.len() != f.vertex_count() || emb.edge_map.len() != edges.len() {
        return false;
    }
    let mut images = emb.vertex_map.clone();
    images.sort_unstable();
    if images.windows(2).any(|w| w[0] == w[1]) || images.last().is_some_and(|&v| v >= h.vertex_count()) {
        return false;
    }
    let mut hosts = Vec::with_capacity(edges.len());
    for (&(a, b), host) in edges.iter().zip(&emb.edge_map) {
        let Some(index) = h.edge_index(host) else {
            return false;
        };
        if !host.contains(&emb.vertex_map[a]) || !host.contains(&emb.vertex_map[b]) {
            return false;
        }
        hosts.push(index);
    }
    hosts.sort_unstable();
    hosts.windows(2).all(|w| w[0] != w[1])
}

/// A hypergraph seen with at most one extra edge appended at index
/// `base.edge_count()`. Lets the saturation scan test `H + e` without
/// rebuilding H for every non-edge.
#[derive(Clone, Copy)]
pub(crate) struct Host<'a> {
    pub base: &'a Hypergraph,
    pub extra: Option<&'a [usize]>,
}

impl<'a> Host<'a> {
    pub fn plain(base: &'a Hypergraph) -> Self {
        Host { base, extra: None }
    }

    pub fn n(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.base.edge_count() + usize::from(self.extra.is_some())
    }

    pub fn edge(&self, i: usize) -> &'a [usize] {
        if i < self.base.edge_count() {
            self.base.edge(i)
        } else {
            self.extra.expect("edge index out of range")
        }
    }

    pub fn incident(&self, v: usize) -> impl Iterator<Item = usize> + 'a {
        let extra = self
            .extra
            .filter(|e| e.binary_search(&v).is_ok())
            .map(|_| self.base.edge_count());
        self.base.incident(v).iter().copied().chain(extra)
    }

    pub fn contains(&self, edge: usize, v: usize) -> bool {
        self.edge(edge).binary_search(&v).is_ok()
    }
}

/// Which hyperedges a search may use. `required`, if set, must appear in
/// the image; every other edge must have index at least `allowed_from`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Scope {
    pub required: Option<usize>,
    pub allowed_from: usize,
}

impl Scope {
    pub const ALL: Scope = Scope {
        required: None,
        allowed_from: 0,
    };

    pub fn through(required: usize) -> Self {
        Scope {
            required: Some(required),
            allowed_from: 0,
        }
    }

    /// Usable as a non-required edge.
    #[inline]
    pub fn side(&self, e: usize) -> bool {
        e >= self.allowed_from && Some(e) != self.required
    }

    #[inline]
    pub fn usable(&self, e: usize) -> bool {
        Some(e) == self.required || e >= self.allowed_from
    }
}

fn embedding_from_indices(host: &Host<'_>, vertex_map: Vec<usize>, edges: &[usize]) -> BergeEmbedding {
    BergeEmbedding {
        vertex_map,
        edge_map: edges.iter().map(|&e| host.edge(e).to_vec()).collect(),
    }
}

/// Decides whether `h` contains a Berge copy of `f`. With `required_edge`,
/// only copies using that hyperedge count; if it is not an edge of `h` the
/// answer is `None`.
pub fn contains_berge(h: &Hypergraph, f: &PatternGraph, required_edge: Option<&[usize]>) -> Option<BergeEmbedding> {
    let required = match required_edge {
        Some(e) => Some(h.edge_index(e)?),
        None => None,
    };
    let mut matcher = Matcher::new(h, f);
    matcher.search(Host::plain(h), required)
}

/// The general decider, whatever the family of `f`. Exposed for
/// consistency checks against the specialized deciders.
pub fn contains_berge_general(
    h: &Hypergraph,
    f: &PatternGraph,
    required_edge: Option<&[usize]>,
) -> Option<BergeEmbedding> {
    let scope = match required_edge {
        Some(e) => Scope::through(h.edge_index(e)?),
        None => Scope::ALL,
    };
    general::search(&Host::plain(h), f.vertex_count(), &f.edges(), scope)
}

pub fn contains_berge_cycle(h: &Hypergraph, m: usize) -> Option<BergeEmbedding> {
    contains_berge(h, &PatternGraph::Cycle(m), None)
}

pub fn contains_berge_star(h: &Hypergraph, m: usize) -> Option<BergeEmbedding> {
    contains_berge(h, &PatternGraph::Star(m), None)
}

pub fn contains_berge_matching(h: &Hypergraph, l: usize) -> Option<BergeEmbedding> {
    contains_berge(h, &PatternGraph::Matching(l), None)
}

enum Kind {
    Path(sequence::PathSearch),
    Cycle(sequence::CycleSearch),
    Star(usize),
    Matching(usize),
    General(usize, Vec<(usize, usize)>),
}

/// A decider prepared for one hypergraph and pattern, reusable across many
/// queries of the form "does `h + e` contain a copy through `e`".
///
/// Holds scratch buffers, so each thread needs its own.
pub struct Matcher<'h> {
    h: &'h Hypergraph,
    kind: Kind,
}

impl<'h> Matcher<'h> {
    pub fn new(h: &'h Hypergraph, f: &PatternGraph) -> Self {
        let kind = match *f {
            PatternGraph::Path(m) if m >= 2 => Kind::Path(sequence::PathSearch::new(h, m - 1)),
            PatternGraph::Cycle(m) if m >= 3 => Kind::Cycle(sequence::CycleSearch::new(h, m)),
            PatternGraph::Triangle => Kind::Cycle(sequence::CycleSearch::new(h, 3)),
            PatternGraph::Star(m) if m >= 1 => Kind::Star(m),
            PatternGraph::Matching(l) if l >= 1 => Kind::Matching(l),
            _ => Kind::General(f.vertex_count(), f.edges()),
        };
        Matcher { h, kind }
    }

    /// A copy in `h` itself, optionally through edge index `required`.
    pub fn find(&mut self, required: Option<&[usize]>) -> Option<BergeEmbedding> {
        let required = match required {
            Some(e) => Some(self.h.edge_index(e)?),
            None => None,
        };
        let h = self.h;
        self.search(Host::plain(h), required)
    }

    /// Whether `h + e` has a copy using `e`. `e` must be a sorted non-edge.
    pub fn completes_with(&mut self, e: &[usize]) -> bool {
        let host = Host {
            base: self.h,
            extra: Some(e),
        };
        let scope = Scope::through(self.h.edge_count());
        match &mut self.kind {
            Kind::Path(p) => p.through(&host, scope),
            Kind::Cycle(c) => c.through(&host, scope),
            _ => self.search(host, scope.required).is_some(),
        }
    }

    /// Like [`Matcher::completes_with`] but returns the copy.
    pub fn witness_with(&mut self, e: &[usize]) -> Option<BergeEmbedding> {
        let host = Host {
            base: self.h,
            extra: Some(e),
        };
        self.search(host, Some(self.h.edge_count()))
    }

    fn search(&mut self, host: Host<'_>, required: Option<usize>) -> Option<BergeEmbedding> {
        match &mut self.kind {
            Kind::Path(p) => p.find(&host, required),
            Kind::Cycle(c) => c.find(&host, required),
            Kind::Star(m) => star::search(&host, *m, required),
            Kind::Matching(l) => matching::search(&host, *l, required),
            Kind::General(vertices, edges) => {
                let scope = required.map_or(Scope::ALL, Scope::through);
                general::search(&host, *vertices, edges, scope)
            }
        }
    }
}

//! Exact canonical codes by individualization-refinement.
//!
//! The search tree is the usual one: refine the vertex colouring to a stable
//! partition, individualize each vertex of the first non-singleton cell in
//! turn, and recurse. Every discrete leaf gives a relabeling; the code is the
//! least relabeled edge list over all leaves. Automorphisms discovered when two
//! leaves produce the same relabeled hypergraph prune the tree, both by
//! unwinding to the common ancestor and by skipping children in the same orbit.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const MAX_CANON_VERTICES: usize = 64;

/// Byte string identifying an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(pub Vec<u8>);

pub fn canonical_code(h: &Hypergraph) -> Result<CanonicalCode> {
    canonical_form(h).map(|(code, _)| code)
}

/// The canonical code together with a relabeling `perm` (old vertex to new)
/// that realizes it.
pub fn canonical_form(h: &Hypergraph) -> Result<(CanonicalCode, Vec<usize>)> {
    let n = h.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooLarge(format!(
            "canonical labeling supports at most {MAX_CANON_VERTICES} vertices, got {n}"
        )));
    }
    let mut search = Search {
        h,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let start = refine(h, vec![0; n]);
    search.visit(start, &mut Vec::new());
    let best = search.best.expect("search always reaches a leaf");
    Ok((best.code, best.labeling))
}

struct Leaf {
    code: CanonicalCode,
    labeling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    h: &'a Hypergraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

const CONTINUE: usize = usize::MAX;

impl Search<'_> {
    /// Returns `CONTINUE`, or the depth of the node the search should unwind
    /// to after an automorphism made the rest of a subtree redundant.
    fn visit(&mut self, colours: Vec<usize>, path: &mut Vec<usize>) -> usize {
        let n = colours.len();
        let cell_count = colours.iter().max().map_or(0, |&c| c + 1);
        if cell_count == n {
            return self.leaf(colours, path);
        }
        // first non-singleton cell, by colour
        let mut size = vec![0usize; cell_count];
        for &c in &colours {
            size[c] += 1;
        }
        let target = (0..cell_count).find(|&c| size[c] > 1).unwrap();
        let cell: Vec<usize> = (0..n).filter(|&v| colours[v] == target).collect();

        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() && self.same_orbit(w, &explored, path) {
                continue;
            }
            explored.push(w);
            path.push(w);
            let child = refine(self.h, individualize(&colours, w));
            let back = self.visit(child, path);
            path.pop();
            if back != CONTINUE && back < depth {
                return back;
            }
        }
        CONTINUE
    }

    fn leaf(&mut self, labeling: Vec<usize>, path: &[usize]) -> usize {
        let code = encode(self.h, &labeling);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                code,
                labeling,
                path: path.to_vec(),
            };
            self.first = Some(Leaf {
                code: leaf.code.clone(),
                labeling: leaf.labeling.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return CONTINUE;
        };
        if code == first.code {
            self.generators.push(automorphism(&first.labeling, &labeling));
            return common_prefix(&first.path, path);
        }
        let best = self.best.as_ref().unwrap();
        match code.cmp(&best.code) {
            Ordering::Equal => {
                self.generators.push(automorphism(&best.labeling, &labeling));
                common_prefix(&best.path, path)
            }
            Ordering::Less => {
                self.best = Some(Leaf {
                    code,
                    labeling,
                    path: path.to_vec(),
                });
                CONTINUE
            }
            Ordering::Greater => CONTINUE,
        }
    }

    /// Whether `w` is in the orbit of an already explored sibling under the
    /// group generated by known automorphisms fixing `prefix` pointwise.
    fn same_orbit(&self, w: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.h.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        for g in &self.generators {
            if prefix.iter().any(|&p| g[p] != p) {
                continue;
            }
            for (v, &image) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&x| find(&mut parent, x) == root)
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Two labelings giving the same relabeled hypergraph differ by an
/// automorphism: `v -> first^-1(other(v))`.
fn automorphism(first: &[usize], other: &[usize]) -> Vec<usize> {
    let mut inverse = vec![0; first.len()];
    for (v, &l) in first.iter().enumerate() {
        inverse[l] = v;
    }
    other.iter().map(|&l| inverse[l]).collect()
}

fn individualize(colours: &[usize], w: usize) -> Vec<usize> {
    // w moves to the front of its cell; colours stay dense ranks
    colours
        .iter()
        .enumerate()
        .map(|(v, &c)| {
            if c > colours[w] || (c == colours[w] && v != w) {
                c + 1
            } else {
                c
            }
        })
        .collect()
}

/// Refines an ordered colouring until stable. Each round splits every cell by
/// the multiset of incident edge colour-multisets; new colours are ordered by
/// (old colour, signature), which keeps the result label-invariant.
fn refine(h: &Hypergraph, mut colours: Vec<usize>) -> Vec<usize> {
    let n = colours.len();
    let mut cells = colours.iter().max().map_or(0, |&c| c + 1);
    loop {
        if cells == n {
            return colours;
        }
        let edge_sig: Vec<Vec<usize>> = h
            .edges()
            .iter()
            .map(|e| {
                let mut s: Vec<usize> = e.iter().map(|&v| colours[v]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        let mut sigs: Vec<(usize, Vec<&Vec<usize>>, usize)> = (0..n)
            .map(|v| {
                let mut s: Vec<&Vec<usize>> = h.incident(v).iter().map(|&e| &edge_sig[e]).collect();
                s.sort_unstable();
                (colours[v], s, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0; n];
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        let new_cells = if n == 0 { 0 } else { rank + 1 };
        colours = next;
        if new_cells == cells {
            return colours;
        }
        cells = new_cells;
    }
}

fn encode(h: &Hypergraph, labeling: &[usize]) -> CanonicalCode {
    let mut edges: Vec<Vec<u8>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut r: Vec<u8> = e.iter().map(|&v| labeling[v] as u8).collect();
            r.sort_unstable();
            r
        })
        .collect();
    edges.sort_unstable();
    let mut code = Vec::with_capacity(6 + edges.len() * h.uniformity());
    code.push(h.vertex_count() as u8);
    code.push(h.uniformity().min(255) as u8);
    code.extend_from_slice(&(edges.len() as u32).to_be_bytes());
    for e in edges {
        code.extend_from_slice(&e);
    }
    CanonicalCode(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(h: &Hypergraph, perm: &[usize]) -> Hypergraph {
        Hypergraph::new(
            h.vertex_count(),
            h.uniformity(),
            h.edges().iter().map(|e| e.iter().map(|&v| perm[v]).collect::<Vec<_>>()),
        )
        .unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let h = Hypergraph::new(7, 3, [[0, 1, 2], [2, 3, 4], [4, 5, 6], [0, 3, 6]]).unwrap();
        let perm = [6, 2, 0, 5, 1, 3, 4];
        assert_eq!(canonical_code(&h), canonical_code(&relabel(&h, &perm)));
    }

    #[test]
    fn sunflower_and_loose_path_differ() {
        let sunflower = Hypergraph::new(7, 3, [[0, 1, 2], [0, 3, 4], [0, 5, 6]]).unwrap();
        let path = Hypergraph::new(7, 3, [[0, 1, 2], [2, 3, 4], [4, 5, 6]]).unwrap();
        assert_ne!(canonical_code(&sunflower), canonical_code(&path));
    }

    #[test]
    fn edge_count_separates() {
        let a = Hypergraph::new(5, 3, [[0, 1, 2]]).unwrap();
        let b = Hypergraph::new(5, 3, [[0, 1, 2], [2, 3, 4]]).unwrap();
        assert_ne!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn realizing_permutation() {
        let h = Hypergraph::new(6, 3, [[0, 1, 5], [1, 2, 3], [3, 4, 5]]).unwrap();
        let (code, perm) = canonical_form(&h).unwrap();
        let relabeled = relabel(&h, &perm);
        assert_eq!(encode(&relabeled, &(0..6).collect::<Vec<_>>()), code);
    }

    #[test]
    fn highly_symmetric_inputs_finish() {
        // empty graph and a large sunflower exercise the orbit pruning
        assert!(canonical_code(&Hypergraph::empty(40, 3).unwrap()).is_ok());
        let petals: Vec<Vec<usize>> = (0..16).map(|i| vec![0, 2 * i + 1, 2 * i + 2]).collect();
        let h = Hypergraph::new(33, 3, petals).unwrap();
        assert!(canonical_code(&h).is_ok());
        let k4 = Hypergraph::new(12, 3, (0..12).map(|i| [i, (i + 1) % 12, (i + 2) % 12])).unwrap();
        assert!(canonical_code(&k4).is_ok());
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            canonical_code(&Hypergraph::empty(65, 3).unwrap()),
            Err(Error::TooLarge(_))
        ));
    }
}

//! Berge-lK_2: l distinct hyperedges, each holding its own private pair.
//!
//! Backtracks over hyperedges in index order. Each chosen hyperedge takes the
//! first pair of still-free vertices; only if the rest fails is another pair
//! tried, so the common case costs one pass.

use super::{embedding_from_indices, BergeEmbedding, Host};

struct State<'a, 'h> {
    host: &'a Host<'h>,
    l: usize,
    required: Option<usize>,
    used_v: Vec<bool>,
    chosen: Vec<(usize, usize, usize)>,
}

pub(crate) fn search(host: &Host<'_>, l: usize, required: Option<usize>) -> Option<BergeEmbedding> {
    if 2 * l > host.n() {
        return None;
    }
    let mut st = State {
        host,
        l,
        required,
        used_v: vec![false; host.n()],
        chosen: Vec::with_capacity(l),
    };
    let found = match required {
        Some(r) => st.place(r, &mut |st| st.extend(0)),
        None => st.extend(0),
    };
    if !found {
        return None;
    }
    let vertex_map = st.chosen.iter().flat_map(|&(_, a, b)| [a, b]).collect();
    let edges: Vec<usize> = st.chosen.iter().map(|&(e, _, _)| e).collect();
    Some(embedding_from_indices(host, vertex_map, &edges))
}

impl State<'_, '_> {
    fn extend(&mut self, from: usize) -> bool {
        if self.chosen.len() == self.l {
            return true;
        }
        let total = self.host.edge_count();
        for e in from..total {
            if Some(e) == self.required {
                continue;
            }
            if total - e < self.l - self.chosen.len() {
                break;
            }
            if self.place(e, &mut |st| st.extend(e + 1)) {
                return true;
            }
        }
        false
    }

    /// Tries each free pair of `e`, calling `rest` after placing it.
    fn place(&mut self, e: usize, rest: &mut dyn FnMut(&mut Self) -> bool) -> bool {
        let edge = self.host.edge(e);
        for (i, &a) in edge.iter().enumerate() {
            if self.used_v[a] {
                continue;
            }
            for &b in &edge[i + 1..] {
                if self.used_v[b] {
                    continue;
                }
                self.used_v[a] = true;
                self.used_v[b] = true;
                self.chosen.push((e, a, b));
                if rest(self) {
                    return true;
                }
                self.chosen.pop();
                self.used_v[a] = false;
                self.used_v[b] = false;
            }
        }
        false
    }
}

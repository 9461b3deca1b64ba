//! Berge-K_{1,m}: some centre v whose incident hyperedges can be matched to
//! m distinct other vertices.

use super::{embedding_from_indices, BergeEmbedding, Host};
use crate::bipartite::max_matching;

pub(crate) fn search(host: &Host<'_>, m: usize, required: Option<usize>) -> Option<BergeEmbedding> {
    let centres: Vec<usize> = match required {
        // every hyperedge of a Berge star contains the centre
        Some(r) => host.edge(r).to_vec(),
        None => (0..host.n()).collect(),
    };
    for v in centres {
        let incident: Vec<usize> = host.incident(v).collect();
        if incident.len() < m {
            continue;
        }
        let found = match required {
            None => match_leaves(host, v, &incident, m, None),
            Some(r) => host
                .edge(r)
                .iter()
                .filter(|&&u| u != v)
                .find_map(|&u| match_leaves(host, v, &incident, m, Some((r, u)))),
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Matches `m` of the hyperedges at `v` to distinct leaves, with `forced`
/// pinning one hyperedge to one leaf.
fn match_leaves(
    host: &Host<'_>,
    v: usize,
    incident: &[usize],
    m: usize,
    forced: Option<(usize, usize)>,
) -> Option<BergeEmbedding> {
    let (skip_edge, skip_vertex) = forced.map_or((usize::MAX, usize::MAX), |(e, u)| (e, u));
    let left: Vec<usize> = incident.iter().copied().filter(|&e| e != skip_edge).collect();
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&e| {
            host.edge(e)
                .iter()
                .copied()
                .filter(|&u| u != v && u != skip_vertex)
                .collect()
        })
        .collect();
    let want = m - usize::from(forced.is_some());
    let matching = max_matching(&adj, host.n());
    if matching.size < want {
        return None;
    }
    let mut pairs: Vec<(usize, usize)> = forced.into_iter().collect();
    pairs.extend(
        left.iter()
            .zip(&matching.left)
            .filter_map(|(&e, &u)| u.map(|u| (e, u)))
            .take(want),
    );
    let mut vertex_map = vec![v];
    vertex_map.extend(pairs.iter().map(|&(_, u)| u));
    let edges: Vec<usize> = pairs.iter().map(|&(e, _)| e).collect();
    Some(embedding_from_indices(host, vertex_map, &edges))
}

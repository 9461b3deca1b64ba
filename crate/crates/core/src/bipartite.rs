//! Maximum bipartite matching by augmenting paths (Kuhn's algorithm).
//!
//! The instances here are tiny (a handful of pattern edges against the
//! hyperedges that could host them) so the simple O(VE) algorithm beats
//! Hopcroft-Karp on constant factors.

pub(crate) struct Matching {
    /// `left[i]` is the right vertex matched to left vertex `i`.
    pub left: Vec<Option<usize>>,
    pub size: usize,
}

/// `adj[i]` lists the right vertices (in `0..right`) adjacent to left vertex `i`.
pub(crate) fn max_matching(adj: &[Vec<usize>], right: usize) -> Matching {
    let mut owner: Vec<Option<usize>> = vec![None; right];
    let mut seen = vec![usize::MAX; right];
    let mut size = 0;
    for i in 0..adj.len() {
        if augment(i, i, adj, &mut owner, &mut seen) {
            size += 1;
        }
    }
    let mut left = vec![None; adj.len()];
    for (r, o) in owner.iter().enumerate() {
        if let Some(l) = *o {
            left[l] = Some(r);
        }
    }
    Matching { left, size }
}

fn augment(
    i: usize,
    stamp: usize,
    adj: &[Vec<usize>],
    owner: &mut [Option<usize>],
    seen: &mut [usize],
) -> bool {
    for &r in &adj[i] {
        if seen[r] == stamp {
            continue;
        }
        seen[r] = stamp;
        match owner[r] {
            None => {
                owner[r] = Some(i);
                return true;
            }
            Some(j) => {
                if augment(j, stamp, adj, owner, seen) {
                    owner[r] = Some(i);
                    return true;
                }
            }
        }
    }
    false
}

//! Deterministic generators for the saturated constructions.
//!
//! Every builder numbers vertices in creation order and, where a choice is
//! free, takes the lowest-numbered eligible vertex, so equal parameters give
//! equal hypergraphs.

mod tree;

use crate::error::{Error, Result};
use crate::formulas;
use crate::hypergraph::{advance_combination, binomial, Hypergraph};

/// Largest edge count a builder will materialize.
pub const MAX_BUILD_EDGES: u64 = 5_000_000;

/// The linear tree T(k, m): Berge-P_m-saturated, longest Berge path m - 2.
pub fn build_path_tree(k: usize, m: usize) -> Result<Hypergraph> {
    let t = tree::build(k, m)?;
    Hypergraph::new(t.n, k, t.edges)
}

/// H(k, m, n): disjoint copies of T(k, m) with the leftover vertices absorbed
/// into the first copy.
pub fn build_path_saturated(k: usize, m: usize, n: usize) -> Result<Hypergraph> {
    let t = tree::build(k, m)?;
    let block = t.n;
    if n < block {
        return Err(Error::TooFewVertices {
            n,
            requirement: format!("n >= {block}, the order of one tree"),
        });
    }
    let copies = n / block;
    let r = n % block;
    let r_prime = r % (k - 1);
    if r_prime > 0 && k >= 6 && m.is_multiple_of(4) {
        return Err(Error::UnspecifiedConstruction(format!(
            "absorbing {r_prime} leftover vertices into the three-branch tree (k = {k}, m = {m})"
        )));
    }
    let mut edges = Vec::with_capacity(copies * t.edges.len() + r / (k - 1) + 1);
    for c in 0..copies {
        let off = c * block;
        edges.extend(t.edges.iter().map(|e| e.iter().map(|&v| v + off).collect::<Vec<_>>()));
    }
    let mut degree = vec![0usize; block];
    for e in &t.edges {
        for &v in e {
            degree[v] += 1;
        }
    }
    let mut spare = copies * block..n;
    if r >= k - 1 {
        // attach new leaves at the inner vertex of the first leaf edge
        let leaf = t
            .edges
            .iter()
            .find(|e| e.iter().filter(|&&v| degree[v] == 1).count() + 1 >= k)
            .expect("a linear tree has a leaf edge");
        let v_prime = *leaf.iter().find(|&&v| degree[v] >= 2).unwrap();
        for _ in 0..r / (k - 1) {
            let mut e = vec![v_prime];
            e.extend(spare.by_ref().take(k - 1));
            edges.push(e);
        }
    }
    if r_prime > 0 {
        let ones = |edge: usize| -> Vec<usize> {
            t.fresh[edge].iter().copied().filter(|&v| degree[v] == 1).collect()
        };
        let mut e: Vec<usize> = spare.collect();
        match k {
            // clone the centre edge, replacing its centre vertex
            3 => e.extend(t.edges[0].iter().copied().filter(|&v| v != t.centre)),
            4 => {
                // the vertex joining the left root to its child, plus
                // degree-one vertices of the right root
                e.push(t.fresh[t.roots[0]][0]);
                e.extend(ones(t.roots[1]).into_iter().take(3 - r_prime));
            }
            _ => {
                // the fork vertex of the right root, plus degree-one vertices
                // of the left root
                e.push(t.fresh[t.roots[1]][0]);
                e.extend(ones(t.roots[0]).into_iter().take(k - 1 - r_prime));
            }
        }
        edges.push(e);
    }
    Hypergraph::new(n, k, edges)
}

/// Edges meeting only at vertex 0, plus one absorbing edge.
pub fn build_triangle_star(k: usize, n: usize) -> Result<Hypergraph> {
    if k < 3 {
        return Err(Error::UnsupportedUniformity(k));
    }
    if n < k + 1 {
        return Err(Error::TooFewVertices {
            n,
            requirement: format!("n >= k + 1 = {}", k + 1),
        });
    }
    let q = (n - 1) / (k - 1);
    let r = (n - 1) % (k - 1);
    let mut edges: Vec<Vec<usize>> = (0..q)
        .map(|i| std::iter::once(0).chain(1 + i * (k - 1)..1 + (i + 1) * (k - 1)).collect())
        .collect();
    if r > 0 {
        let mut e = vec![0];
        e.extend(n - r..n);
        e.extend(1..k - r);
        edges.push(e);
    }
    Hypergraph::new(n, k, edges)
}

/// Edges pairwise meeting in a common (m-2)-set I.
pub fn build_cycle_book(k: usize, m: usize, n: usize) -> Result<Hypergraph> {
    if m < 4 {
        return Err(Error::ParameterRegime(format!("cycle book needs m >= 4, got {m}")));
    }
    if k + 1 < m {
        return Err(Error::ParameterRegime(format!("cycle book needs k >= m - 1, got k = {k}, m = {m}")));
    }
    let core = m - 2;
    let petal = k - core;
    let min = m * petal + core;
    if n <= min {
        return Err(Error::TooFewVertices {
            n,
            requirement: format!("n > m(k - m + 2) + m - 2 = {min}"),
        });
    }
    let q = (n - core) / petal;
    let r = (n - core) % petal;
    let mut edges: Vec<Vec<usize>> = (0..q)
        .map(|i| (0..core).chain(core + i * petal..core + (i + 1) * petal).collect())
        .collect();
    if r > 0 {
        let mut e: Vec<usize> = (0..core).collect();
        e.extend(n - r..n);
        e.extend(core..core + petal - r);
        edges.push(e);
    }
    Hypergraph::new(n, k, edges)
}

/// (m-1)-cliques glued at one vertex, for k = m - 2.
pub fn build_cycle_cliques_keq(m: usize, n: usize) -> Result<Hypergraph> {
    if m < 5 {
        return Err(Error::ParameterRegime(format!("needs k = m - 2 >= 3, got m = {m}")));
    }
    let k = m - 2;
    if n < m * m {
        return Err(Error::TooFewVertices {
            n,
            requirement: format!("n >= m^2 = {}", m * m),
        });
    }
    let q = (n - 1) / (m - 2);
    let r = (n - 1) % (m - 2);
    check_size(q as u64, binomial((m - 1) as u64, k as u64))?;
    let mut edges = Vec::new();
    for i in 0..q {
        let clique: Vec<usize> = std::iter::once(0).chain(1 + i * (m - 2)..1 + (i + 1) * (m - 2)).collect();
        push_clique(&mut edges, &clique, k);
    }
    // each absorbing edge is {v, x} + up to k-2 leftovers, topped up from K
    let (v, x) = (0, 1);
    let fill: Vec<usize> = (2..m - 1).collect();
    let leftovers: Vec<usize> = (n - r..n).collect();
    for chunk in leftovers.chunks(k - 2) {
        let mut e = vec![v, x];
        e.extend(chunk);
        e.extend(&fill[..k - 2 - chunk.len()]);
        edges.push(e);
    }
    Hypergraph::new(n, k, edges)
}

/// The least l with 2l - 1 > m and l > k.
pub fn cycle_clique_order(k: usize, m: usize) -> usize {
    (m.div_ceil(2) + 1).max(k + 1)
}

/// Cliques on l or l+1 vertices glued at one vertex, for 3 <= k <= m - 3.
pub fn build_cycle_cliques(k: usize, m: usize, n: usize) -> Result<Hypergraph> {
    if k < 3 || k + 3 > m {
        return Err(Error::ParameterRegime(format!("needs 3 <= k <= m - 3, got k = {k}, m = {m}")));
    }
    let l = cycle_clique_order(k, m);
    if n < l * l {
        return Err(Error::TooFewVertices {
            n,
            requirement: format!("n >= l^2 = {} (l = {l})", l * l),
        });
    }
    let q = (n - 1) / (l - 1);
    let big = (n - 1) % (l - 1);
    check_size(q as u64, binomial((l + 1) as u64, k as u64))?;
    let mut edges = Vec::new();
    let mut next = 1;
    for i in 0..q {
        let size = if i < big { l } else { l - 1 };
        let clique: Vec<usize> = std::iter::once(0).chain(next..next + size).collect();
        next += size;
        push_clique(&mut edges, &clique, k);
    }
    Hypergraph::new(n, k, edges)
}

/// Tight cycle on n - k + 1 vertices plus k - 1 isolated vertices.
pub fn build_star_tightcycle(k: usize, n: usize) -> Result<Hypergraph> {
    if k < 3 {
        return Err(Error::UnsupportedUniformity(k));
    }
    if n < k * k {
        return Err(Error::TooFewVertices {
            n,
            requirement: format!("n >= k^2 = {}", k * k),
        });
    }
    let len = n - k + 1;
    Hypergraph::new(n, k, (0..len).map(|i| (0..k).map(|j| (i + j) % len).collect::<Vec<_>>()))
}

/// Disjoint m-cliques, plus a smaller clique or isolated vertices.
pub fn build_star_cliques(k: usize, m: usize, n: usize) -> Result<Hypergraph> {
    if k < 3 || k + 1 > m {
        return Err(Error::ParameterRegime(format!("needs 3 <= k <= m - 1, got k = {k}, m = {m}")));
    }
    check_size(formulas::div_ceil(n as u64, m as u64), binomial(m as u64, k as u64))?;
    let mut edges = Vec::new();
    for i in 0..n / m {
        push_clique(&mut edges, &(i * m..(i + 1) * m).collect::<Vec<_>>(), k);
    }
    if n % m >= k {
        push_clique(&mut edges, &(n - n % m..n).collect::<Vec<_>>(), k);
    }
    Hypergraph::new(n, k, edges)
}

/// l - 1 disjoint edges.
pub fn build_matching(k: usize, l: usize, n: usize) -> Result<Hypergraph> {
    if k < 3 {
        return Err(Error::UnsupportedUniformity(k));
    }
    if l < 1 {
        return Err(Error::ParameterRegime("matching size must be at least 1".into()));
    }
    if n < k * (l - 1) {
        return Err(Error::TooFewVertices {
            n,
            requirement: format!("n >= k(l - 1) = {}", k * (l - 1)),
        });
    }
    Hypergraph::new(n, k, (0..l - 1).map(|i| (i * k..(i + 1) * k).collect::<Vec<_>>()))
}

/// The 3-uniform tree of nine edges with longest Berge path 4: a vertex on
/// three edges, and two pendant edges at one outer vertex of each.
pub fn figure_one_fixture() -> Hypergraph {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..3 {
        let (mid, outer) = (next, next + 1);
        next += 2;
        edges.push(vec![0, mid, outer]);
        for _ in 0..2 {
            edges.push(vec![outer, next, next + 1]);
            next += 2;
        }
    }
    Hypergraph::new(next, 3, edges).expect("fixture is well formed")
}

fn check_size(cliques: u64, per_clique: Option<u64>) -> Result<()> {
    match per_clique.and_then(|p| p.checked_mul(cliques)) {
        Some(total) if total <= MAX_BUILD_EDGES => Ok(()),
        _ => Err(Error::TooLarge(format!("construction would exceed {MAX_BUILD_EDGES} edges"))),
    }
}

fn push_clique(edges: &mut Vec<Vec<usize>>, vertices: &[usize], k: usize) {
    if vertices.len() < k {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        edges.push(idx.iter().map(|&i| vertices[i]).collect());
        if !advance_combination(&mut idx, vertices.len()) {
            break;
        }
    }
}

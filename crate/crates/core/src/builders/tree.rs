//! The path-saturated linear trees T(k, m), level by level.
//!
//! Each tree is a centre (an edge for k = 3, a vertex otherwise) with two
//! branches, or three when k >= 6 and 4 | m. A branch keeps the edges added at
//! its latest level as its frontier, and every level applies one operation to
//! each frontier edge. The schedule below is the whole construction; the edge
//! counts and the longest-path length (m - 2) are checked by tests.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    /// One pendant edge at each of the first `c` new vertices.
    Pendant(usize),
    /// Two pendant edges at the first new vertex.
    Fork,
}

/// Built tree plus the landmarks the absorbing step needs.
#[derive(Clone, Debug)]
pub(crate) struct Tree {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    /// The vertex shared by all branches (for k = 3 the centre edge's vertex
    /// not on any branch).
    pub centre: usize,
    /// First edge of each branch (attached to the centre).
    pub roots: Vec<usize>,
    /// For each edge, the vertices created with it, in creation order.
    pub fresh: Vec<Vec<usize>>,
}

struct Builder {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    fresh: Vec<Vec<usize>>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn pendant(&mut self, at: usize) -> usize {
        let new: Vec<usize> = (1..self.k).map(|_| self.vertex()).collect();
        let mut edge = vec![at];
        edge.extend(&new);
        self.edges.push(edge);
        self.fresh.push(new);
        self.edges.len() - 1
    }

    fn apply(&mut self, op: Op, frontier: &[usize]) -> Vec<usize> {
        let mut next = Vec::new();
        for &f in frontier {
            match op {
                Op::Pendant(c) => {
                    for i in 0..c {
                        let at = self.fresh[f][i];
                        next.push(self.pendant(at));
                    }
                }
                Op::Fork => {
                    let at = self.fresh[f][0];
                    next.push(self.pendant(at));
                    next.push(self.pendant(at));
                }
            }
        }
        next
    }
}

/// Per-branch schedules for levels after the first.
fn schedule(k: usize, m: usize) -> Result<Vec<Vec<Op>>> {
    use Op::*;
    let (branches, mut common, mut extras): (usize, Vec<Op>, Vec<Vec<Op>>);
    match k {
        3 => {
            let min = 8;
            if m < min {
                return Err(Error::OrderTooSmall { k, m, min });
            }
            // level j >= 2: even -> two pendants, odd -> one
            let by_level = |j: usize| if j.is_multiple_of(2) { Pendant(2) } else { Pendant(1) };
            let levels = if m % 2 == 1 { (m - 3) / 2 } else { (m - 4) / 2 };
            branches = 2;
            common = (2..=levels).map(by_level).collect();
            extras = vec![Vec::new(), Vec::new()];
            if m.is_multiple_of(2) {
                extras[0].push(by_level(levels + 1));
            }
        }
        4 => {
            let min = 10;
            if m < min {
                return Err(Error::OrderTooSmall { k, m, min });
            }
            let (s, r) = (m / 6, m % 6);
            let cycle = [Pendant(1), Pendant(2), Pendant(1)];
            branches = 2;
            common = (2..3 * s).map(|j| cycle[(j - 2) % 3]).collect();
            let (both, left): (&[Op], &[Op]) = match r {
                0 => (&[], &[]),
                1 => (&[], &[Pendant(2)]),
                2 => (&[Pendant(2)], &[]),
                3 => (&[Pendant(2)], &[Pendant(1)]),
                4 => (&[Pendant(2), Pendant(1)], &[]),
                _ => (&[Pendant(2), Pendant(1)], &[Pendant(1)]),
            };
            common.extend_from_slice(both);
            extras = vec![left.to_vec(), Vec::new()];
        }
        5 => return Err(Error::UnsupportedUniformity(5)),
        k if k >= 6 => {
            let min = 8;
            if m < min {
                return Err(Error::OrderTooSmall { k, m, min });
            }
            if m.is_multiple_of(4) {
                let by_level = |j: usize| if j.is_multiple_of(2) { Pendant(1) } else { Fork };
                branches = 3;
                common = (2..=(m - 4) / 2).map(by_level).collect();
                common.push(Pendant(1));
                extras = vec![Vec::new(); 3];
            } else {
                let by_level = |j: usize| if j.is_multiple_of(2) { Fork } else { Pendant(1) };
                let levels = (m - 4 - m % 4) / 2 + 1;
                branches = 2;
                common = (2..=levels).map(by_level).collect();
                extras = match m % 4 {
                    1 => vec![vec![Pendant(1)], vec![]],
                    2 => vec![vec![Pendant(1)], vec![Pendant(1)]],
                    _ => vec![vec![Fork, Pendant(1)], vec![Pendant(1)]],
                };
            }
        }
        _ => return Err(Error::UnsupportedUniformity(k)),
    }
    Ok((0..branches)
        .map(|b| common.iter().chain(&extras[b]).copied().collect())
        .collect())
}

pub(crate) fn build(k: usize, m: usize) -> Result<Tree> {
    let plan = schedule(k, m)?;
    let mut b = Builder {
        k,
        n: 0,
        edges: Vec::new(),
        fresh: Vec::new(),
    };
    let centre;
    let mut frontiers: Vec<Vec<usize>>;
    if k == 3 {
        // centre edge {v, a, b}; the branches start at a and b
        let vertices: Vec<usize> = (0..3).map(|_| b.vertex()).collect();
        b.edges.push(vertices.clone());
        b.fresh.push(vertices);
        centre = 0;
        frontiers = vec![vec![b.pendant(1)], vec![b.pendant(2)]];
    } else {
        centre = b.vertex();
        frontiers = (0..plan.len()).map(|_| vec![b.pendant(centre)]).collect();
    }
    let roots = frontiers.iter().map(|f| f[0]).collect();
    let depth = plan.iter().map(Vec::len).max().unwrap_or(0);
    for level in 0..depth {
        for (branch, frontier) in frontiers.iter_mut().enumerate() {
            if let Some(&op) = plan[branch].get(level) {
                *frontier = b.apply(op, frontier);
            }
        }
    }
    Ok(Tree {
        n: b.n,
        edges: b.edges,
        centre,
        roots,
        fresh: b.fresh,
    })
}

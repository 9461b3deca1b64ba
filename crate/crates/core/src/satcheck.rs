//! Exhaustive Berge-F freeness and saturation checks.
//!
//! Saturation is checked by scanning every non-edge e in lexicographic order
//! and asking whether H + e has a copy of F through e (any copy in H + e must
//! use e, since H is checked to be F-free first). Such a copy sends exactly
//! one edge xy of F to e and never looks at the rest of e, so it exists iff
//! some pair {x, y} inside e is "good": H plus the two-vertex edge {x, y} has
//! a copy through it. The good pairs are found first with one search each,
//! which turns the scan itself into table lookups.
//!
//! The scan is split into tasks by the first one or two vertices of e. Workers claim tasks in order from an
//! atomic counter, and the earliest failing task wins, so the reported failure
//! and scan count do not depend on the number of workers.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::berge::{BergeEmbedding, Matcher, PatternGraph};
use crate::hypergraph::Hypergraph;

/// Why a hypergraph is not saturated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// H already contains a copy.
    Contains(BergeEmbedding),
    /// Adding this non-edge creates no copy.
    NonEdge(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationReport {
    pub free: bool,
    pub saturated: bool,
    pub violation: Option<Violation>,
    /// Non-edges checked, up to and including a failing one.
    pub scanned: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("saturation check timed out after {elapsed:?}")]
pub struct Timeout {
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub workers: usize,
    pub timeout: Option<Duration>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            workers: 1,
            timeout: None,
        }
    }
}

/// `None` if `h` has no Berge copy of `f`, otherwise a copy.
pub fn is_berge_free(h: &Hypergraph, f: &PatternGraph) -> Option<BergeEmbedding> {
    Matcher::new(h, f).find(None)
}

pub fn is_berge_saturated(h: &Hypergraph, f: &PatternGraph, workers: usize) -> SaturationReport {
    let options = CheckOptions {
        workers,
        timeout: None,
    };
    is_berge_saturated_with(h, f, &options).expect("no deadline was set")
}

pub fn is_berge_saturated_with(
    h: &Hypergraph,
    f: &PatternGraph,
    options: &CheckOptions,
) -> Result<SaturationReport, Timeout> {
    let start = Instant::now();
    if let Some(emb) = is_berge_free(h, f) {
        return Ok(SaturationReport {
            free: false,
            saturated: false,
            violation: Some(Violation::Contains(emb)),
            scanned: 0,
            elapsed: start.elapsed(),
        });
    }
    let deadline = options.timeout.map(|t| start + t);
    let Some(good) = good_pairs(h, f, options.workers, deadline) else {
        return Err(Timeout {
            elapsed: start.elapsed(),
        });
    };
    let scan = Scan::new(h, good, deadline);
    let workers = options.workers.max(1).min(scan.tasks.len().max(1));
    thread::scope(|s| {
        for _ in 1..workers {
            s.spawn(|| scan.work());
        }
        scan.work();
    });
    if scan.timed_out.load(Ordering::Relaxed) {
        return Err(Timeout {
            elapsed: start.elapsed(),
        });
    }
    let failure = scan.failure.into_inner().unwrap();
    let last = failure.as_ref().map_or(scan.tasks.len(), |(t, _)| t + 1);
    let scanned = scan.counts[..last].iter().map(|c| c.load(Ordering::Relaxed)).sum();
    Ok(SaturationReport {
        free: true,
        saturated: failure.is_none(),
        violation: failure.map(|(_, e)| Violation::NonEdge(e)),
        scanned,
        elapsed: start.elapsed(),
    })
}

/// `good[x * n + y]` for x < y, or `None` past the deadline.
fn good_pairs(h: &Hypergraph, f: &PatternGraph, workers: usize, deadline: Option<Instant>) -> Option<Vec<bool>> {
    let n = h.vertex_count();
    if n < h.uniformity() {
        return Some(Vec::new());
    }
    let rows: Vec<Vec<AtomicBool>> = (0..n).map(|x| (x..n).map(|_| AtomicBool::new(false)).collect()).collect();
    let next = AtomicUsize::new(0);
    let late = AtomicBool::new(false);
    let work = || {
        let mut matcher = Matcher::new(h, f);
        loop {
            let x = next.fetch_add(1, Ordering::Relaxed);
            if x >= n || late.load(Ordering::Relaxed) {
                return;
            }
            for y in x + 1..n {
                rows[x][y - x].store(matcher.completes_with(&[x, y]), Ordering::Relaxed);
            }
            if deadline.is_some_and(|d| Instant::now() >= d) {
                late.store(true, Ordering::Relaxed);
            }
        }
    };
    thread::scope(|s| {
        for _ in 1..workers.clamp(1, n) {
            s.spawn(work);
        }
        work();
    });
    if late.into_inner() {
        return None;
    }
    let mut good = vec![false; n * n];
    for (x, row) in rows.into_iter().enumerate() {
        for (d, cell) in row.into_iter().enumerate() {
            good[x * n + x + d] = cell.into_inner();
        }
    }
    Some(good)
}

/// Shared state of one complement scan.
struct Scan<'a> {
    h: &'a Hypergraph,
    good: Vec<bool>,
    /// Prefixes fixing the first vertices of each task's non-edges.
    tasks: Vec<Vec<usize>>,
    next: AtomicUsize,
    /// Index of the earliest task known to fail.
    best: AtomicUsize,
    failure: Mutex<Option<(usize, Vec<usize>)>>,
    counts: Vec<AtomicU64>,
    deadline: Option<Instant>,
    timed_out: AtomicBool,
}

const DEADLINE_STRIDE: u64 = 1024;

impl<'a> Scan<'a> {
    fn new(h: &'a Hypergraph, good: Vec<bool>, deadline: Option<Instant>) -> Self {
        let (n, k) = (h.vertex_count(), h.uniformity());
        let depth = (k - 1).min(2);
        let mut tasks = Vec::new();
        if n >= k {
            let mut prefix: Vec<usize> = (0..depth).collect();
            // prefixes must leave room for the k - depth later vertices
            let top = n - (k - depth);
            loop {
                tasks.push(prefix.clone());
                if !crate::hypergraph::advance_combination(&mut prefix, top) {
                    break;
                }
            }
        }
        let counts = tasks.iter().map(|_| AtomicU64::new(0)).collect();
        Scan {
            h,
            good,
            tasks,
            next: AtomicUsize::new(0),
            best: AtomicUsize::new(usize::MAX),
            failure: Mutex::new(None),
            counts,
            deadline,
            timed_out: AtomicBool::new(false),
        }
    }

    /// Whether some pair inside the sorted k-set is good.
    fn completes(&self, edge: &[usize]) -> bool {
        let n = self.h.vertex_count();
        edge.iter()
            .enumerate()
            .any(|(i, &x)| edge[i + 1..].iter().any(|&y| self.good[x * n + y]))
    }

    fn work(&self) {
        let (n, k) = (self.h.vertex_count(), self.h.uniformity());
        let mut edge = vec![0; k];
        let mut idx = Vec::new();
        loop {
            let t = self.next.fetch_add(1, Ordering::Relaxed);
            if t >= self.tasks.len() || t > self.best.load(Ordering::Acquire) || self.timed_out.load(Ordering::Relaxed) {
                return;
            }
            let prefix = &self.tasks[t];
            let p = prefix.len();
            edge[..p].copy_from_slice(prefix);
            let lo = prefix[p - 1] + 1;
            let width = n - lo;
            let rest = k - p;
            idx.clear();
            idx.extend(0..rest);
            let mut scanned = 0u64;
            loop {
                for (slot, &i) in edge[p..].iter_mut().zip(&idx) {
                    *slot = lo + i;
                }
                if !self.h.contains_edge(&edge) {
                    scanned += 1;
                    if !self.completes(&edge) {
                        self.counts[t].store(scanned, Ordering::Relaxed);
                        self.record(t, edge.clone());
                        break;
                    }
                    if scanned.is_multiple_of(DEADLINE_STRIDE) {
                        if self.best.load(Ordering::Acquire) < t {
                            return;
                        }
                        if self.deadline.is_some_and(|d| Instant::now() >= d) {
                            self.timed_out.store(true, Ordering::Relaxed);
                            return;
                        }
                    }
                }
                if rest == 0 || !crate::hypergraph::advance_combination(&mut idx, width) {
                    self.counts[t].store(scanned, Ordering::Relaxed);
                    break;
                }
            }
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                self.timed_out.store(true, Ordering::Relaxed);
                return;
            }
        }
    }

    fn record(&self, task: usize, edge: Vec<usize>) {
        let mut slot = self.failure.lock().unwrap();
        if slot.as_ref().is_none_or(|(t, _)| task < *t) {
            *slot = Some((task, edge));
        }
        self.best.fetch_min(task, Ordering::AcqRel);
    }
}

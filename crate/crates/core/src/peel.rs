//! k-core peeling: the collapse cascade.
//!
//! The k-core of a graph is its unique largest induced subgraph with minimum
//! degree k. It is computed by repeatedly removing vertices of degree < k;
//! removing a vertex may push neighbors below the threshold, so removals
//! cascade until a fixed point is reached.
//!
//! The cascade here is deterministic: the removal queue is FIFO, seeded in
//! ascending vertex id order, and cascading removals enqueue neighbors in
//! ascending id order (adjacency lists are sorted). The resulting core set
//! is independent of any such ordering choice; only the reported elimination
//! order depends on it.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Outcome of one peel: the surviving core and the cascade order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelResult {
    /// The k-core of the peeled subgraph.
    pub core: VertexSet,
    /// Collapsed vertices as `(vertex, degree at elimination)` in removal
    /// order. Vertices of the `deleted` input set are not listed; they were
    /// deleted, not collapsed.
    pub eliminated: Vec<(usize, usize)>,
}

/// Reusable peel state. The branching solvers run one peel per search node,
/// so the buffers are allocated once per solve and reset in O(n) per peel.
pub(crate) struct PeelScratch {
    pub(crate) deg: Vec<usize>,
    pub(crate) removed: Vec<bool>,
    queued: Vec<bool>,
    queue: VecDeque<usize>,
    pub(crate) order: Vec<(usize, usize)>,
    pub(crate) core_size: usize,
}

impl PeelScratch {
    pub(crate) fn new(n: usize) -> Self {
        PeelScratch {
            deg: vec![0; n],
            removed: vec![false; n],
            queued: vec![false; n],
            queue: VecDeque::with_capacity(n),
            order: Vec::with_capacity(n),
            core_size: 0,
        }
    }

    /// Peel the k-core of `g - deleted`. Afterwards `removed[v]` is false
    /// exactly for core vertices, `deg[v]` is the induced core degree of
    /// every core vertex, and `order` lists the collapsed vertices.
    pub(crate) fn peel(&mut self, g: &Graph, k: usize, deleted: &VertexSet) {
        let n = g.vertex_count();
        self.order.clear();
        self.queue.clear();
        self.removed[..n].fill(false);
        self.queued[..n].fill(false);
        for v in 0..n {
            self.deg[v] = g.degree(v);
        }
        // induced degrees by subtraction: cheaper than rescanning all
        // adjacency when few vertices are deleted, as in the solvers
        for v in deleted.iter() {
            self.removed[v] = true;
            for &w in g.neighbors(v) {
                self.deg[w] = self.deg[w].wrapping_sub(1);
            }
        }
        self.core_size = n - deleted.len();
        for v in 0..n {
            if !self.removed[v] && self.deg[v] < k {
                self.queued[v] = true;
                self.queue.push_back(v);
            }
        }
        while let Some(v) = self.queue.pop_front() {
            self.removed[v] = true;
            self.core_size -= 1;
            self.order.push((v, self.deg[v]));
            for &w in g.neighbors(v) {
                if !self.removed[w] {
                    self.deg[w] -= 1;
                    if self.deg[w] < k && !self.queued[w] {
                        self.queued[w] = true;
                        self.queue.push_back(w);
                    }
                }
            }
        }
    }

    pub(crate) fn in_core(&self, v: usize) -> bool {
        !self.removed[v]
    }

    pub(crate) fn core_set(&self, n: usize) -> VertexSet {
        VertexSet::from_members(n, (0..n).filter(|&v| !self.removed[v]))
    }
}

/// The k-core of `g - deleted` together with the elimination order.
///
/// Runs in O(n + m). An empty core is a valid result, not an error.
pub fn k_core(g: &Graph, k: usize, deleted: &VertexSet) -> PeelResult {
    assert_eq!(deleted.universe(), g.vertex_count(), "deleted set universe mismatch");
    let mut scratch = PeelScratch::new(g.vertex_count());
    scratch.peel(g, k, deleted);
    PeelResult {
        core: scratch.core_set(g.vertex_count()),
        eliminated: scratch.order,
    }
}

/// Degeneracy: the smallest r such that repeatedly removing a minimum-degree
/// vertex never removes a vertex of degree > r. 0 for edgeless graphs.
///
/// Bucket-min removal in O(n + m). Equivalently the largest k with a
/// non-empty k-core; the two routes are cross-checked in the test suites.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = g.max_degree();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in 0..n {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut result = 0;
    let mut cursor = 0;
    for _ in 0..n {
        // entries are lazy: skip stale ones whose degree moved on
        while cursor <= max_deg {
            match buckets[cursor].pop() {
                Some(v) if !removed[v] && deg[v] == cursor => {
                    removed[v] = true;
                    result = result.max(cursor);
                    for &w in g.neighbors(v) {
                        if !removed[w] {
                            deg[w] -= 1;
                            buckets[deg[w]].push(w);
                        }
                    }
                    // a neighbor may now sit one bucket below the cursor
                    cursor = cursor.saturating_sub(1);
                    break;
                }
                Some(_) => continue,
                None => cursor += 1,
            }
        }
    }
    result
}

/// The (k+b)-core of `g`: vertices that no deletion set of size <= b can
/// collapse, only delete outright. If its size minus b exceeds the residual
/// bound the instance is immediately a No.
pub fn stable_core(g: &Graph, k: usize, b: usize) -> VertexSet {
    k_core(g, k + b, &VertexSet::empty(g.vertex_count())).core
}

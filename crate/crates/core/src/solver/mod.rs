//! Branching solvers for Collapsed k-Core with k = 1 and k = 2.
//!
//! Both searches maintain a set S of committed deletions and a set Q of
//! vertices sworn never to be deleted (they must collapse or count toward
//! the residual bound). A node either answers directly, prunes, or branches
//! on the highest-degree core vertex outside Q: delete it first, forbid it
//! second. The first witness found is therefore deterministic.
//!
//! Every Yes answer is re-verified by an independent peel before it is
//! returned; a bad witness is a bug and aborts the process rather than
//! returning a wrong answer.

use std::time::{Duration, Instant};

use crate::graph::Graph;
use crate::peel::{k_core, PeelScratch};
use crate::vertex_set::VertexSet;

mod k1;
mod k2;

pub use k1::solve_k1;
pub use k2::{plan_cycle_greedy, solve_fvs, solve_k2, CycleGreedyPlan};

/// Answer of a solve run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    /// The node budget was exhausted before the search could decide.
    Aborted,
}

/// Search counters for benchmarking and prune-soundness tests.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolverStats {
    /// Recursive calls entered, including immediately pruned ones.
    pub nodes_visited: u64,
    /// Rejections because the deletion set exceeded the budget b.
    pub prune_budget: u64,
    /// Rejections because the forbidden set exceeded its bound.
    pub prune_forbidden: u64,
    /// Rejections because the remaining core cannot be shrunk below the
    /// residual bound (stuck / failed greedy).
    pub prune_stuck: u64,
    pub wall_time: Duration,
}

/// Tie-break among maximum-degree branch candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Lowest vertex id wins (the default, reproducible choice).
    #[default]
    LowestId,
    /// Highest vertex id wins; exists so tests can show the decision does
    /// not depend on the tie-break.
    HighestId,
}

/// Knobs shared by both branching solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Replace the forbidden-set bound by the trivial bound n. Decisions
    /// must not change; node counts may grow. Testing hook.
    pub disable_q_bound: bool,
    /// Abort after visiting this many nodes; 0 means unlimited.
    pub node_budget: u64,
    pub tie_break: TieBreak,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            disable_q_bound: false,
            node_budget: 0,
            tie_break: TieBreak::LowestId,
        }
    }
}

/// Result of one solve: the decision plus, for Yes, a verified witness,
/// the set of vertices its deletion collapses, and the residual core size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub decision: Decision,
    pub witness: Option<VertexSet>,
    pub collapsed: Option<VertexSet>,
    pub residual_core_size: Option<usize>,
    pub stats: SolverStats,
}

impl Outcome {
    pub(crate) fn no(stats: SolverStats) -> Outcome {
        Outcome {
            decision: Decision::No,
            witness: None,
            collapsed: None,
            residual_core_size: None,
            stats,
        }
    }

    pub(crate) fn aborted(stats: SolverStats) -> Outcome {
        Outcome {
            decision: Decision::Aborted,
            witness: None,
            collapsed: None,
            residual_core_size: None,
            stats,
        }
    }
}

/// Mutable state of one branch of the search.
#[derive(Debug)]
pub(crate) struct BranchState {
    /// S: committed deletions.
    pub deleted: VertexSet,
    /// Q: vertices sworn not to be deleted on this branch.
    pub forbidden: VertexSet,
    pub depth: usize,
}

pub(crate) enum SearchResult {
    Found(VertexSet),
    NoSolution,
    Aborted,
}

/// State shared by every node of one solve call. The underlying graph is
/// borrowed read-only, so concurrent solves on the same graph are safe.
pub(crate) struct Search<'a> {
    pub g: &'a Graph,
    pub b: usize,
    pub x: usize,
    pub q_bound: usize,
    pub node_budget: u64,
    pub tie_break: TieBreak,
    pub stats: SolverStats,
    pub scratch: PeelScratch,
    pub state: BranchState,
}

impl<'a> Search<'a> {
    pub(crate) fn new(g: &'a Graph, b: usize, x: usize, q_bound: usize, options: SolverOptions) -> Self {
        let n = g.vertex_count();
        Search {
            g,
            b,
            x,
            q_bound: if options.disable_q_bound { n } else { q_bound },
            node_budget: options.node_budget,
            tie_break: options.tie_break,
            stats: SolverStats::default(),
            scratch: PeelScratch::new(n),
            state: BranchState {
                deleted: VertexSet::empty(n),
                forbidden: VertexSet::empty(n),
                depth: 0,
            },
        }
    }

    /// Account for a node visit. Returns false when the node budget is
    /// already spent and the search must abort.
    pub(crate) fn enter_node(&mut self) -> bool {
        if self.node_budget != 0 && self.stats.nodes_visited >= self.node_budget {
            return false;
        }
        self.stats.nodes_visited += 1;
        debug_assert!(self.state.deleted.is_disjoint_from(&self.state.forbidden));
        true
    }

    /// Highest-degree core vertex outside the forbidden set, according to
    /// the configured tie-break. Degrees are induced core degrees from the
    /// preceding peel. None iff every core vertex is forbidden.
    pub(crate) fn select_branch_vertex(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..self.g.vertex_count() {
            if !self.scratch.in_core(v) || self.state.forbidden.contains(v) {
                continue;
            }
            let d = self.scratch.deg[v];
            let better = match (best, self.tie_break) {
                (None, _) => true,
                (Some((bd, _)), TieBreak::LowestId) => d > bd,
                (Some((bd, _)), TieBreak::HighestId) => d >= bd,
            };
            if better {
                best = Some((d, v));
            }
        }
        best.map(|(_, v)| v)
    }
}

/// Package a finished search into an Outcome. Yes answers are re-verified
/// with a fresh peel, independent of any state the search accumulated.
pub(crate) fn finish(
    g: &Graph,
    k: usize,
    b: usize,
    x: usize,
    result: SearchResult,
    mut stats: SolverStats,
    started: Instant,
) -> Outcome {
    stats.wall_time = started.elapsed();
    match result {
        SearchResult::NoSolution => Outcome::no(stats),
        SearchResult::Aborted => Outcome::aborted(stats),
        SearchResult::Found(witness) => {
            assert!(
                witness.len() <= b,
                "solver bug: witness of size {} exceeds budget {}",
                witness.len(),
                b
            );
            let peel = k_core(g, k, &witness);
            assert!(
                peel.core.len() <= x,
                "solver bug: witness leaves a {}-core of size {} > {}",
                k,
                peel.core.len(),
                x
            );
            let n = g.vertex_count();
            Outcome {
                decision: Decision::Yes,
                collapsed: Some(VertexSet::from_members(
                    n,
                    peel.eliminated.iter().map(|&(v, _)| v),
                )),
                residual_core_size: Some(peel.core.len()),
                witness: Some(witness),
                stats,
            }
        }
    }
}

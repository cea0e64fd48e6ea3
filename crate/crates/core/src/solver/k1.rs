//! Exact branching solver for Collapsed k-Core with k = 1.
//!
//! Search tree size is bounded by 2^(x+2b+2) nodes: a branch is cut as soon
//! as the deletion set exceeds b or the forbidden set exceeds b + x (no
//! solution extending the branch can exist once more than b + x vertices
//! are sworn off), and each surviving node does one peel in O(n + m).

use std::time::Instant;

use crate::graph::Graph;
use crate::solver::{finish, Outcome, Search, SearchResult, SolverOptions};

/// Decide whether deleting at most `b` vertices of `g` can leave a 1-core
/// with at most `x` vertices. Budgets larger than n are clamped to n.
pub fn solve_k1(g: &Graph, b: usize, x: usize, options: SolverOptions) -> Outcome {
    let started = Instant::now();
    let n = g.vertex_count();
    let (b, x) = (b.min(n), x.min(n));
    let mut search = Search::new(g, b, x, b + x, options);
    let result = recurse(&mut search);
    finish(g, 1, b, x, result, search.stats, started)
}

fn recurse(search: &mut Search) -> SearchResult {
    if !search.enter_node() {
        return SearchResult::Aborted;
    }
    debug_assert!(search.state.deleted.len() <= search.b + 1);
    debug_assert!(search.state.forbidden.len() <= search.q_bound + 1);

    if search.state.deleted.len() > search.b {
        search.stats.prune_budget += 1;
        return SearchResult::NoSolution;
    }
    if search.state.forbidden.len() > search.q_bound {
        search.stats.prune_forbidden += 1;
        return SearchResult::NoSolution;
    }

    search.scratch.peel(search.g, 1, &search.state.deleted);
    if search.scratch.core_size <= search.x {
        return SearchResult::Found(search.state.deleted.clone());
    }

    // every core vertex forbidden: nothing left that could shrink the core
    let Some(v) = search.select_branch_vertex() else {
        search.stats.prune_stuck += 1;
        return SearchResult::NoSolution;
    };

    // delete v first, forbid it second
    search.state.deleted.insert(v);
    search.state.depth += 1;
    let deleted_branch = recurse(search);
    search.state.depth -= 1;
    search.state.deleted.remove(v);
    if !matches!(deleted_branch, SearchResult::NoSolution) {
        return deleted_branch;
    }

    search.state.forbidden.insert(v);
    search.state.depth += 1;
    let forbidden_branch = recurse(search);
    search.state.depth -= 1;
    search.state.forbidden.remove(v);
    forbidden_branch
}

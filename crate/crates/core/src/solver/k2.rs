//! Exact branching solver for Collapsed k-Core with k = 2.
//!
//! Same S/Q scheme as the k = 1 solver with two changes. The forbidden-set
//! bound becomes 3b + x. And branching only happens on core vertices of
//! degree at least 3: once every non-forbidden vertex of the current 2-core
//! has degree exactly 2, the forbidden-free components are disjoint cycles,
//! and one deletion per cycle is all a deletion can ever achieve there. The
//! search then finishes greedily by breaking the largest such cycles with
//! the remaining budget, or rejects the branch if even that leaves a core
//! above the residual bound.
//!
//! With x = 0 this is an exact Feedback Vertex Set solver.

use std::time::Instant;

use crate::graph::Graph;
use crate::solver::{finish, Outcome, Search, SearchResult, SolverOptions};
use crate::vertex_set::VertexSet;

/// The greedy endgame of the low-degree regime: the forbidden-free cycle
/// components of the current 2-core, largest first, and what breaking the
/// `r_prime` largest of them removes.
#[derive(Debug, Clone)]
pub struct CycleGreedyPlan {
    /// Forbidden-free components, sorted by size descending (ties by
    /// smallest member). In the low-degree regime each one is a cycle.
    pub components: Vec<VertexSet>,
    /// How many components the remaining budget can break.
    pub r_prime: usize,
    /// Total size of the `r_prime` largest components.
    pub removable_total: usize,
}

/// Build the greedy plan for a 2-core `core` of some graph, given the
/// forbidden set and the remaining deletion budget.
pub fn plan_cycle_greedy(
    g: &Graph,
    core: &VertexSet,
    forbidden: &VertexSet,
    remaining_budget: usize,
) -> CycleGreedyPlan {
    let components: Vec<VertexSet> = g
        .components(core)
        .into_iter()
        .filter(|c| c.iter().all(|v| !forbidden.contains(v)))
        .collect();
    let r_prime = remaining_budget.min(components.len());
    let removable_total = components[..r_prime].iter().map(VertexSet::len).sum();
    CycleGreedyPlan {
        components,
        r_prime,
        removable_total,
    }
}

/// Decide whether deleting at most `b` vertices of `g` can leave a 2-core
/// with at most `x` vertices. Budgets larger than n are clamped to n.
pub fn solve_k2(g: &Graph, b: usize, x: usize, options: SolverOptions) -> Outcome {
    let started = Instant::now();
    let n = g.vertex_count();
    let (b, x) = (b.min(n), x.min(n));
    let mut ctx = K2Search {
        search: Search::new(g, b, x, 3 * b + x, options),
        visited: vec![false; n],
        stack: Vec::new(),
        comps: Vec::new(),
    };
    let result = recurse(&mut ctx);
    finish(g, 2, b, x, result, ctx.search.stats, started)
}

/// Feedback Vertex Set: does `g` have a set of at most `b` vertices whose
/// removal leaves the graph acyclic? Thin alias for `solve_k2` with x = 0.
pub fn solve_fvs(g: &Graph, b: usize) -> Outcome {
    solve_k2(g, b, 0, SolverOptions::default())
}

struct K2Search<'a> {
    search: Search<'a>,
    visited: Vec<bool>,
    stack: Vec<usize>,
    /// (size, min id) of forbidden-free core components, scratch.
    comps: Vec<(usize, usize)>,
}

fn recurse(ctx: &mut K2Search) -> SearchResult {
    let search = &mut ctx.search;
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

    search.scratch.peel(search.g, 2, &search.state.deleted);
    if search.scratch.core_size <= search.x {
        return SearchResult::Found(search.state.deleted.clone());
    }

    let candidate = search.select_branch_vertex();
    let v = match candidate {
        Some(v) if search.scratch.deg[v] > 2 => v,
        // low-degree regime: every non-forbidden core vertex has degree
        // exactly 2 (or none is left), so greed decides this branch
        _ => return greedy_cycles(ctx),
    };

    let search = &mut ctx.search;
    search.state.deleted.insert(v);
    search.state.depth += 1;
    let deleted_branch = recurse(ctx);
    ctx.search.state.depth -= 1;
    ctx.search.state.deleted.remove(v);
    if !matches!(deleted_branch, SearchResult::NoSolution) {
        return deleted_branch;
    }

    ctx.search.state.forbidden.insert(v);
    ctx.search.state.depth += 1;
    let forbidden_branch = recurse(ctx);
    ctx.search.state.depth -= 1;
    ctx.search.state.forbidden.remove(v);
    forbidden_branch
}

/// Resolve a low-degree node: break the largest forbidden-free cycles with
/// the remaining budget, accept iff what is left fits the residual bound.
fn greedy_cycles(ctx: &mut K2Search) -> SearchResult {
    let search = &mut ctx.search;
    let g = search.g;
    let n = g.vertex_count();

    ctx.comps.clear();
    ctx.visited[..n].fill(false);
    for seed in 0..n {
        if !search.scratch.in_core(seed) || ctx.visited[seed] {
            continue;
        }
        // ascending seed scan: the seed is the component's smallest member
        let mut size = 0;
        let mut has_forbidden = false;
        ctx.visited[seed] = true;
        ctx.stack.push(seed);
        while let Some(u) = ctx.stack.pop() {
            size += 1;
            has_forbidden |= search.state.forbidden.contains(u);
            for &w in g.neighbors(u) {
                if search.scratch.in_core(w) && !ctx.visited[w] {
                    ctx.visited[w] = true;
                    ctx.stack.push(w);
                }
            }
        }
        if !has_forbidden {
            ctx.comps.push((size, seed));
        }
    }
    ctx.comps
        .sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let r_prime = (search.b - search.state.deleted.len()).min(ctx.comps.len());
    let removable: usize = ctx.comps[..r_prime].iter().map(|&(size, _)| size).sum();
    if search.scratch.core_size - removable <= search.x {
        let mut witness = search.state.deleted.clone();
        for &(_, min_id) in &ctx.comps[..r_prime] {
            witness.insert(min_id);
        }
        SearchResult::Found(witness)
    } else {
        search.stats.prune_stuck += 1;
        SearchResult::NoSolution
    }
}

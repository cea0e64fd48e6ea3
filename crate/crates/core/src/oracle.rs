//! Brute-force reference solver for any k.
//!
//! Enumerates candidate deletion sets in increasing size and, within a size,
//! in lexicographic order, so the first satisfying set is a minimum-size,
//! lexicographically smallest witness. That ordering is a contract: derived
//! expected values in the test suites depend on it.
//!
//! This is the ground truth the branching solvers are validated against, so
//! it stays a plain transcription of the problem predicate plus one sound
//! shortcut: vertices of the (k+b)-core can never be collapsed by at most b
//! deletions, so if even deleting b of them leaves more than x, the answer
//! is No before any enumeration.

use std::time::Instant;

use thiserror::Error;

use crate::graph::Graph;
use crate::peel::{k_core, stable_core, PeelScratch};
use crate::solver::{Decision, Outcome, SolverStats};
use crate::vertex_set::VertexSet;

/// Size guards for the enumeration. The defaults keep desk-scale runs under
/// seconds; raise them explicitly when you know what you are asking for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_n: usize,
    pub max_b: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_n: 20, max_b: 6 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large for brute force: n = {n} (limit {max_n}), b = {b} (limit {max_b})")]
    TooLarge {
        n: usize,
        b: usize,
        max_n: usize,
        max_b: usize,
    },
}

/// Decide the instance by enumeration under the default limits.
pub fn solve_brute(g: &Graph, b: usize, x: usize, k: usize) -> Result<Outcome, OracleError> {
    solve_brute_with(g, b, x, k, EnumerationLimits::default())
}

/// Decide the instance by enumeration under explicit limits.
pub fn solve_brute_with(
    g: &Graph,
    b: usize,
    x: usize,
    k: usize,
    limits: EnumerationLimits,
) -> Result<Outcome, OracleError> {
    let started = Instant::now();
    let n = g.vertex_count();
    let (b, x) = (b.min(n), x.min(n));
    if n > limits.max_n || b > limits.max_b {
        return Err(OracleError::TooLarge {
            n,
            b,
            max_n: limits.max_n,
            max_b: limits.max_b,
        });
    }

    let mut stats = SolverStats::default();

    if stable_core(g, k, b).len().saturating_sub(b) > x {
        stats.nodes_visited = 1;
        stats.prune_stuck = 1;
        stats.wall_time = started.elapsed();
        return Ok(Outcome::no(stats));
    }

    let mut scratch = PeelScratch::new(n);
    let mut candidate = VertexSet::empty(n);
    for size in 0..=b {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            for &v in &combo {
                candidate.insert(v);
            }
            stats.nodes_visited += 1;
            scratch.peel(g, k, &candidate);
            let hit = scratch.core_size <= x;
            for &v in &combo {
                candidate.remove(v);
            }
            if hit {
                let witness = VertexSet::from_members(n, combo.iter().copied());
                let peel = k_core(g, k, &witness);
                stats.wall_time = started.elapsed();
                return Ok(Outcome {
                    decision: Decision::Yes,
                    collapsed: Some(VertexSet::from_members(
                        n,
                        peel.eliminated.iter().map(|&(v, _)| v),
                    )),
                    residual_core_size: Some(peel.core.len()),
                    witness: Some(witness),
                    stats,
                });
            }
            if !advance(&mut combo, n) {
                break;
            }
        }
    }
    stats.wall_time = started.elapsed();
    Ok(Outcome::no(stats))
}

/// Advance a sorted index combination to its lexicographic successor over
/// `0..n`; false when exhausted.
fn advance(combo: &mut [usize], n: usize) -> bool {
    let s = combo.len();
    let mut i = s;
    while i > 0 {
        i -= 1;
        if combo[i] < n - s + i {
            combo[i] += 1;
            for j in i + 1..s {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest budget for which the instance is a Yes under the default
/// limits. A budget of n always suffices (delete every vertex).
pub fn min_budget(g: &Graph, x: usize, k: usize) -> Result<usize, OracleError> {
    min_budget_with(g, x, k, EnumerationLimits::default())
}

/// Smallest budget for which the instance is a Yes under explicit limits.
pub fn min_budget_with(
    g: &Graph,
    x: usize,
    k: usize,
    limits: EnumerationLimits,
) -> Result<usize, OracleError> {
    for b in 0..=g.vertex_count() {
        if solve_brute_with(g, b, x, k, limits)?.decision == Decision::Yes {
            return Ok(b);
        }
    }
    unreachable!("deleting all vertices always empties the core");
}

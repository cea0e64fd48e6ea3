//! Machine-readable run reports and the solver dispatch they describe.
//!
//! Reports serialize deterministically: struct fields are declared in
//! alphabetical order (serde emits them in declaration order) and all
//! vertex sets are sorted. Parsing a report and serializing it again is
//! byte-identical.

use anyhow::bail;
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use collapse_core::generators::Instance;
use collapse_core::oracle::solve_brute;
use collapse_core::{k_core, solve_k1, solve_k2, Decision, Outcome, SolverOptions, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Auto,
    BranchK1,
    BranchK2,
    Brute,
}

impl Algorithm {
    /// Resolve `auto` against k and reject incompatible explicit choices.
    pub fn resolve(self, k: usize) -> anyhow::Result<Algorithm> {
        match self {
            Algorithm::Auto => Ok(match k {
                1 => Algorithm::BranchK1,
                2 => Algorithm::BranchK2,
                _ => Algorithm::Brute,
            }),
            Algorithm::BranchK1 if k != 1 => {
                bail!("incompatible algorithm: branch-k1 requires k = 1, got k = {k}")
            }
            Algorithm::BranchK2 if k != 2 => {
                bail!("incompatible algorithm: branch-k2 requires k = 2, got k = {k}")
            }
            other => Ok(other),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::BranchK1 => "branch-k1",
            Algorithm::BranchK2 => "branch-k2",
            Algorithm::Brute => "brute",
        }
    }
}

/// Run one instance with one (resolved) algorithm.
pub fn run_algorithm(
    algorithm: Algorithm,
    inst: &Instance,
    options: SolverOptions,
) -> anyhow::Result<(Algorithm, Outcome)> {
    let resolved = algorithm.resolve(inst.k)?;
    let outcome = match resolved {
        Algorithm::BranchK1 => solve_k1(&inst.graph, inst.b, inst.x, options),
        Algorithm::BranchK2 => solve_k2(&inst.graph, inst.b, inst.x, options),
        Algorithm::Brute => solve_brute(&inst.graph, inst.b, inst.x, inst.k)?,
        Algorithm::Auto => unreachable!("resolve never returns auto"),
    };
    Ok((resolved, outcome))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportStats {
    pub nodes_visited: u64,
    pub prune_budget: u64,
    pub prune_forbidden: u64,
    pub prune_stuck: u64,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub algorithm: String,
    pub collapsed: Option<Vec<usize>>,
    pub decision: String,
    pub instance: String,
    pub residual_core_size: Option<usize>,
    pub stats: ReportStats,
    pub verified: bool,
    pub witness: Option<Vec<usize>>,
}

pub fn decision_name(decision: Decision) -> &'static str {
    match decision {
        Decision::Yes => "yes",
        Decision::No => "no",
        Decision::Aborted => "aborted",
    }
}

pub fn exit_code(decision: Decision) -> i32 {
    match decision {
        Decision::Yes => 0,
        Decision::No => 1,
        Decision::Aborted => 3,
    }
}

impl RunReport {
    /// Build a report, re-verifying any witness against a fresh peel.
    pub fn build(inst: &Instance, algorithm: Algorithm, outcome: &Outcome) -> RunReport {
        let verified = match &outcome.witness {
            Some(witness) => {
                witness.len() <= inst.b
                    && k_core(&inst.graph, inst.k, witness).core.len() <= inst.x
            }
            None => false,
        };
        RunReport {
            algorithm: algorithm.name().to_string(),
            collapsed: outcome.collapsed.as_ref().map(VertexSet::to_vec),
            decision: decision_name(outcome.decision).to_string(),
            instance: inst.label.clone(),
            residual_core_size: outcome.residual_core_size,
            stats: ReportStats {
                nodes_visited: outcome.stats.nodes_visited,
                prune_budget: outcome.stats.prune_budget,
                prune_forbidden: outcome.stats.prune_forbidden,
                prune_stuck: outcome.stats.prune_stuck,
                wall_time_ms: outcome.stats.wall_time.as_secs_f64() * 1e3,
            },
            verified,
            witness: outcome.witness.as_ref().map(VertexSet::to_vec),
        }
    }
}

//! Exact solving for the Collapsed k-Core problem: given an undirected
//! graph, a deletion budget b, a residual bound x and a degree threshold k,
//! decide whether deleting at most b vertices leaves a k-core with at most
//! x vertices — and if so, produce a verified deletion set.
//!
//! The crate provides:
//!
//! - [`graph`], [`vertex_set`], [`peel`]: the immutable graph substrate,
//!   k-core peeling (the collapse cascade), degeneracy and components;
//! - [`solver`]: linear-time-per-node branching solvers for k = 1 and
//!   k = 2 (the latter doubling as a Feedback Vertex Set solver at x = 0);
//! - [`oracle`]: a brute-force reference solver for any k, the ground
//!   truth of the test suites;
//! - [`generators`]: decision-preserving instance transforms, a
//!   clique-hardness family, the OR-gadget fixture, and seeded random
//!   instances;
//! - [`edgelist`]: the plain-text graph format used by the CLI.
//!
//! Graphs are immutable after construction and safe to share across
//! threads; every solve call keeps its search state private.

pub mod edgelist;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod peel;
pub mod solver;
pub mod vertex_set;

pub use graph::{Graph, GraphError};
pub use peel::{degeneracy, k_core, stable_core, PeelResult};
pub use solver::{
    solve_fvs, solve_k1, solve_k2, Decision, Outcome, SolverOptions, SolverStats, TieBreak,
};
pub use vertex_set::VertexSet;

//! `collapse` — exact solving for the Collapsed k-Core problem.
//!
//! Exit codes: 0 the answer is Yes (or the command succeeded), 1 the answer
//! is No (or a witness failed verification), 2 error, 3 the node budget was
//! exhausted before a decision.

mod bench;
mod diag;
mod io;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::Serialize;

use collapse_core::generators::{
    add_universal, clique_to_collapse, or_gadget, or_gadget_boosted, pad_core_target,
    random_instance, Instance,
};
use collapse_core::{degeneracy, k_core, SolverOptions, VertexSet};

use report::{exit_code, run_algorithm, Algorithm, RunReport};

#[derive(Parser)]
#[command(
    name = "collapse",
    about = "Exact solvers, oracle, and generators for the Collapsed k-Core problem",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the k-core, degeneracy, and elimination order of a graph.
    Core {
        /// Graph in edge-list format.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Emit JSON instead of human-readable text.
        #[arg(long)]
        json: bool,
    },
    /// Decide one instance and print a run report as JSON.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Deletion budget.
        #[arg(long)]
        b: usize,
        /// Residual core bound.
        #[arg(long)]
        x: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "auto")]
        algorithm: Algorithm,
        /// Abort after this many search nodes (0 = unlimited).
        #[arg(long, default_value_t = 0)]
        node_budget: u64,
        /// Replace the forbidden-set bound by the trivial bound n.
        #[arg(long)]
        disable_q_bound: bool,
    },
    /// Check a witness deletion set against an instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        k: usize,
        /// Witness file: one vertex id per line.
        #[arg(long)]
        witness: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate instances and fixtures.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Run a suite of instances against several algorithms (JSON lines).
    Bench {
        /// Suite description, JSON.
        #[arg(long)]
        suite: PathBuf,
        #[arg(long, default_value_t = 0)]
        node_budget: u64,
        #[arg(long)]
        disable_q_bound: bool,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Seeded random instance; writes <output>.gr and <output>.json.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 3)]
        b_max: usize,
        #[arg(long, default_value_t = 3)]
        x_max: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// The 8-vertex OR gadget; writes <output>.gr only.
    OrGadget {
        /// Attach a fresh K4 to each input vertex.
        #[arg(long)]
        boosted: bool,
        #[arg(long)]
        output: PathBuf,
    },
    /// Clique hardness reduction from an input graph.
    CliqueReduction {
        #[arg(long)]
        input: PathBuf,
        /// Clique size to encode (budget of the output instance).
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// Raise the residual bound of an x = 0 instance, preserving the answer.
    PadCore {
        /// Instance base path (reads <input>.gr and <input>.json).
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        x_new: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// Add a universal vertex and one unit of budget, preserving the answer.
    AddUniversal {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
}

#[derive(Serialize)]
struct CoreReport {
    core: Vec<usize>,
    core_size: usize,
    degeneracy: usize,
    eliminated: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct VerifyReport {
    collapsed_count: usize,
    residual_core_size: usize,
    verdict: String,
    witness_size: usize,
}

fn cmd_core(input: &Path, k: usize, json: bool) -> anyhow::Result<i32> {
    let g = io::read_graph(input)?;
    diag::info(format!(
        "loaded {} ({} vertices, {} edges)",
        input.display(),
        g.vertex_count(),
        g.edge_count()
    ));
    let peel = k_core(&g, k, &VertexSet::empty(g.vertex_count()));
    let report = CoreReport {
        core: peel.core.to_vec(),
        core_size: peel.core.len(),
        degeneracy: degeneracy(&g),
        eliminated: peel.eliminated,
    };
    if json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("core size: {}", report.core_size);
        println!(
            "core: {}",
            report
                .core
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        );
        println!("degeneracy: {}", report.degeneracy);
        println!(
            "eliminated: {}",
            report
                .eliminated
                .iter()
                .map(|(v, d)| format!("({v},{d})"))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    Ok(0)
}

fn cmd_solve(
    input: &Path,
    b: usize,
    x: usize,
    k: usize,
    algorithm: Algorithm,
    options: SolverOptions,
) -> anyhow::Result<i32> {
    anyhow::ensure!(k >= 1, "solve requires k >= 1");
    let g = io::read_graph(input)?;
    let inst = Instance::new(g, b, x, k, input.display().to_string());
    diag::info(format!("solving {} with b={b} x={x} k={k}", inst.label));
    let (resolved, outcome) = run_algorithm(algorithm, &inst, options)?;
    diag::trace(format!(
        "{} visited {} nodes",
        resolved.name(),
        outcome.stats.nodes_visited
    ));
    let report = RunReport::build(&inst, resolved, &outcome);
    println!("{}", serde_json::to_string(&report)?);
    Ok(exit_code(outcome.decision))
}

fn cmd_verify(
    input: &Path,
    b: usize,
    x: usize,
    k: usize,
    witness_path: &Path,
    json: bool,
) -> anyhow::Result<i32> {
    let g = io::read_graph(input)?;
    let ids = io::read_witness(witness_path, g.vertex_count())?;
    let witness = VertexSet::from_members(g.vertex_count(), ids.iter().copied());
    let peel = k_core(&g, k, &witness);
    let ok = witness.len() <= b && peel.core.len() <= x;
    let report = VerifyReport {
        collapsed_count: peel.eliminated.len(),
        residual_core_size: peel.core.len(),
        verdict: if ok { "ok".into() } else { "fail".into() },
        witness_size: witness.len(),
    };
    if json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("witness size: {} (budget {})", report.witness_size, b);
        println!(
            "residual core size: {} (bound {})",
            report.residual_core_size, x
        );
        println!("collapsed: {}", report.collapsed_count);
        println!("verdict: {}", report.verdict.to_uppercase());
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_gen(family: &GenFamily) -> anyhow::Result<i32> {
    match family {
        GenFamily::Random {
            seed,
            n_max,
            density,
            b_max,
            x_max,
            k,
            output,
        } => {
            anyhow::ensure!(*k >= 1, "gen random requires k >= 1");
            anyhow::ensure!(*n_max >= 1, "gen random requires n_max >= 1");
            let inst = random_instance(*seed, *n_max, *density, *b_max, *x_max, *k);
            io::write_instance(output, &inst)?;
            println!("{}", inst.label);
        }
        GenFamily::OrGadget { boosted, output } => {
            let g = if *boosted { or_gadget_boosted() } else { or_gadget() };
            let path = io::graph_path(output);
            if let Some(dir) = path.parent() {
                if !dir.as_os_str().is_empty() {
                    std::fs::create_dir_all(dir)?;
                }
            }
            std::fs::write(&path, collapse_core::edgelist::write_edge_list(&g))?;
            println!("or_gadget(boosted={boosted}) -> {}", path.display());
        }
        GenFamily::CliqueReduction { input, p, k, output } => {
            anyhow::ensure!(*k >= 1, "gen clique-reduction requires k >= 1");
            let g = io::read_graph(input)?;
            let inst = clique_to_collapse(&g, *p, *k)?;
            io::write_instance(output, &inst)?;
            println!("{}", inst.label);
        }
        GenFamily::PadCore { input, x_new, output } => {
            let inst = io::read_instance(input)?;
            let padded = pad_core_target(&inst, *x_new)?;
            io::write_instance(output, &padded)?;
            println!("{}", padded.label);
        }
        GenFamily::AddUniversal { input, output } => {
            let inst = io::read_instance(input)?;
            let grown = add_universal(&inst);
            io::write_instance(output, &grown)?;
            println!("{}", grown.label);
        }
    }
    Ok(0)
}

fn cmd_bench(suite: &Path, options: SolverOptions) -> anyhow::Result<i32> {
    let text = std::fs::read_to_string(suite)
        .with_context(|| format!("cannot read {}", suite.display()))?;
    let spec: bench::SuiteSpec =
        serde_json::from_str(&text).with_context(|| format!("invalid suite {}", suite.display()))?;
    let suite_dir = suite
        .parent()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("."));
    Ok(bench::run_suite(&spec, &suite_dir, options))
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match &cli.command {
        Command::Core { input, k, json } => cmd_core(input, *k, *json),
        Command::Solve {
            input,
            b,
            x,
            k,
            algorithm,
            node_budget,
            disable_q_bound,
        } => cmd_solve(
            input,
            *b,
            *x,
            *k,
            *algorithm,
            SolverOptions {
                node_budget: *node_budget,
                disable_q_bound: *disable_q_bound,
                ..SolverOptions::default()
            },
        ),
        Command::Verify {
            input,
            b,
            x,
            k,
            witness,
            json,
        } => cmd_verify(input, *b, *x, *k, witness, *json),
        Command::Gen { family } => cmd_gen(family),
        Command::Bench {
            suite,
            node_budget,
            disable_q_bound,
        } => cmd_bench(
            suite,
            SolverOptions {
                node_budget: *node_budget,
                disable_q_bound: *disable_q_bound,
                ..SolverOptions::default()
            },
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

//! Benchmark harness: run a suite of instances against a list of
//! algorithms and emit JSON-lines reports plus a summary row.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use collapse_core::generators::{random_instance, Instance};
use collapse_core::{Decision, SolverOptions};

use crate::diag;
use crate::io::read_instance;
use crate::report::{run_algorithm, Algorithm, RunReport};

#[derive(Debug, Deserialize)]
pub struct SuiteSpec {
    pub instances: Vec<InstanceSpec>,
    pub algorithms: Vec<Algorithm>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum InstanceSpec {
    Path { path: PathBuf },
    Random { random: RandomSpec },
}

#[derive(Debug, Deserialize)]
pub struct RandomSpec {
    pub seed: u64,
    pub n_max: usize,
    pub density: f64,
    pub b_max: usize,
    pub x_max: usize,
    pub k: usize,
}

#[derive(Debug, Serialize)]
struct ErrorLine {
    error: ErrorBody,
}

#[derive(Debug, Serialize)]
struct ErrorBody {
    algorithm: String,
    instance: String,
    message: String,
}

#[derive(Debug, Serialize)]
struct SummaryLine {
    summary: Summary,
}

#[derive(Debug, Serialize)]
struct Summary {
    aborted: usize,
    disagreements: usize,
    errors: usize,
    no: usize,
    runs: usize,
    yes: usize,
}

fn load_instance(spec: &InstanceSpec, suite_dir: &Path) -> anyhow::Result<Instance> {
    match spec {
        InstanceSpec::Path { path } => {
            let base = if path.is_relative() {
                suite_dir.join(path)
            } else {
                path.clone()
            };
            read_instance(&base)
        }
        InstanceSpec::Random { random } => {
            anyhow::ensure!(random.k >= 1, "random instance spec requires k >= 1");
            anyhow::ensure!(random.n_max >= 1, "random instance spec requires n_max >= 1");
            Ok(random_instance(
                random.seed,
                random.n_max,
                random.density,
                random.b_max,
                random.x_max,
                random.k,
            ))
        }
    }
}

/// Run the whole suite, printing one JSON line per (instance, algorithm)
/// in suite order and a summary line at the end. Returns the exit code:
/// 0 when every run succeeded, 2 when any run errored.
pub fn run_suite(spec: &SuiteSpec, suite_dir: &Path, options: SolverOptions) -> i32 {
    let mut summary = Summary {
        aborted: 0,
        disagreements: 0,
        errors: 0,
        no: 0,
        runs: 0,
        yes: 0,
    };

    for inst_spec in &spec.instances {
        let inst = match load_instance(inst_spec, suite_dir) {
            Ok(inst) => inst,
            Err(err) => {
                for algorithm in &spec.algorithms {
                    let line = ErrorLine {
                        error: ErrorBody {
                            algorithm: algorithm.name().to_string(),
                            instance: format!("{inst_spec:?}"),
                            message: format!("{err:#}"),
                        },
                    };
                    println!("{}", serde_json::to_string(&line).unwrap());
                    summary.errors += 1;
                }
                continue;
            }
        };
        diag::info(format!("bench instance {}", inst.label));

        let mut decisions: Vec<Decision> = Vec::new();
        for &algorithm in &spec.algorithms {
            match run_algorithm(algorithm, &inst, options) {
                Ok((resolved, outcome)) => {
                    summary.runs += 1;
                    match outcome.decision {
                        Decision::Yes => summary.yes += 1,
                        Decision::No => summary.no += 1,
                        Decision::Aborted => summary.aborted += 1,
                    }
                    if outcome.decision != Decision::Aborted {
                        decisions.push(outcome.decision);
                    }
                    let report = RunReport::build(&inst, resolved, &outcome);
                    println!("{}", serde_json::to_string(&report).unwrap());
                }
                Err(err) => {
                    summary.errors += 1;
                    let line = ErrorLine {
                        error: ErrorBody {
                            algorithm: algorithm.name().to_string(),
                            instance: inst.label.clone(),
                            message: format!("{err:#}"),
                        },
                    };
                    println!("{}", serde_json::to_string(&line).unwrap());
                }
            }
        }
        if decisions.windows(2).any(|w| w[0] != w[1]) {
            summary.disagreements += 1;
        }
    }

    let had_errors = summary.errors > 0;
    println!(
        "{}",
        serde_json::to_string(&SummaryLine { summary }).unwrap()
    );
    if had_errors {
        2
    } else {
        0
    }
}

//! Instance files on disk: `<base>.gr` holds the graph in the edge-list
//! format, `<base>.json` the sidecar `{b, k, label, x}`.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::{Deserialize, Serialize};

use collapse_core::edgelist::{parse_edge_list, write_edge_list};
use collapse_core::generators::Instance;
use collapse_core::Graph;

#[derive(Debug, Serialize, Deserialize)]
struct Sidecar {
    b: usize,
    k: usize,
    label: String,
    x: usize,
}

pub fn graph_path(base: &Path) -> PathBuf {
    base.with_extension("gr")
}

pub fn sidecar_path(base: &Path) -> PathBuf {
    base.with_extension("json")
}

pub fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parse error in {}", path.display()))
}

pub fn write_instance(base: &Path, inst: &Instance) -> anyhow::Result<()> {
    if let Some(dir) = base.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    fs::write(graph_path(base), write_edge_list(&inst.graph))?;
    let sidecar = Sidecar {
        b: inst.b,
        k: inst.k,
        label: inst.label.clone(),
        x: inst.x,
    };
    fs::write(sidecar_path(base), serde_json::to_string(&sidecar)? + "\n")?;
    Ok(())
}

pub fn read_instance(base: &Path) -> anyhow::Result<Instance> {
    let graph = read_graph(&graph_path(base))?;
    let sidecar_file = sidecar_path(base);
    let sidecar: Sidecar = serde_json::from_str(
        &fs::read_to_string(&sidecar_file)
            .with_context(|| format!("cannot read {}", sidecar_file.display()))?,
    )
    .with_context(|| format!("invalid sidecar {}", sidecar_file.display()))?;
    Ok(Instance::new(graph, sidecar.b, sidecar.x, sidecar.k, sidecar.label))
}

/// Witness files: one vertex id per line; blank lines and `#` comments
/// are ignored.
pub fn read_witness(path: &Path, n: usize) -> anyhow::Result<Vec<usize>> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let mut ids = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: usize = line
            .parse()
            .with_context(|| format!("{}: line {}: not a vertex id", path.display(), idx + 1))?;
        anyhow::ensure!(
            v < n,
            "{}: line {}: vertex {} out of range (graph has {} vertices)",
            path.display(),
            idx + 1,
            v,
            n
        );
        ids.push(v);
    }
    Ok(ids)
}

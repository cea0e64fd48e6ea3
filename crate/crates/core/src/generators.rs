//! Instance builders: decision-preserving transforms, an adversarial
//! clique-based family, the OR-gadget fixture, and seeded random instances
//! for the property suites.
//!
//! Everything here is a deterministic function of its arguments. Random
//! instances use the self-contained SplitMix64 generator below rather than
//! a library RNG, so any reimplementation can replay a suite from the seeds
//! alone.

use thiserror::Error;

use crate::graph::Graph;

/// One Collapsed k-Core decision problem.
///
/// Budgets are clamped to the vertex count at construction: deleting or
/// keeping more vertices than exist changes nothing about the decision.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub b: usize,
    pub x: usize,
    pub k: usize,
    /// Provenance string, e.g. `random(seed=7,...)` or `pad_core_target(...)`.
    pub label: String,
}

impl Instance {
    pub fn new(graph: Graph, b: usize, x: usize, k: usize, label: impl Into<String>) -> Instance {
        assert!(k >= 1, "instance requires k >= 1");
        let n = graph.vertex_count();
        Instance {
            graph,
            b: b.min(n),
            x: x.min(n),
            k,
            label: label.into(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("pad_core_target requires an instance with x = 0, got x = {0}")]
    ResidualNotZero(usize),
    #[error("pad_core_target requires x_new >= 1")]
    TargetNotPositive,
    #[error("clique_to_collapse requires p <= n, got p = {p} on {n} vertices")]
    CliqueTooLarge { p: usize, n: usize },
    #[error("clique_to_collapse requires minimum degree p + 1 = {required}; vertex {vertex} has degree {degree}")]
    DegreeTooSmall {
        vertex: usize,
        degree: usize,
        required: usize,
    },
}

/// Turn an x = 0 instance into an equivalent one with residual bound
/// `x_new >= 1`.
///
/// If `x_new <= k` the graph is unchanged: a k-core on at most k vertices
/// is necessarily empty, so the two bounds accept the same deletion sets.
/// Otherwise the graph gains a disjoint clique on `x_new` vertices, which
/// any solution must leave intact as exactly the allowed residual.
pub fn pad_core_target(inst: &Instance, x_new: usize) -> Result<Instance, GeneratorError> {
    if inst.x != 0 {
        return Err(GeneratorError::ResidualNotZero(inst.x));
    }
    if x_new == 0 {
        return Err(GeneratorError::TargetNotPositive);
    }
    let label = format!("pad_core_target(x_new={x_new}) of {}", inst.label);
    if x_new <= inst.k {
        Ok(Instance::new(inst.graph.clone(), inst.b, x_new, inst.k, label))
    } else {
        let graph = inst.graph.disjoint_union(&Graph::complete(x_new));
        Ok(Instance::new(graph, inst.b, x_new, inst.k, label))
    }
}

/// Add a vertex adjacent to everything and one unit of budget to spend on
/// it; the decision is unchanged.
pub fn add_universal(inst: &Instance) -> Instance {
    let n = inst.graph.vertex_count();
    let mut edges = inst.graph.edges().to_vec();
    edges.extend((0..n).map(|v| (v, n)));
    let graph = Graph::new(n + 1, &edges).expect("universal vertex keeps the graph simple");
    Instance::new(
        graph,
        inst.b + 1,
        inst.x,
        inst.k,
        format!("add_universal of {}", inst.label),
    )
}

/// Encode "does `g` contain a clique of size p?" as a Collapsed k-Core
/// instance.
///
/// Every edge e of `g` grows k tail vertices `u_e^1..u_e^k`, each adjacent
/// to both endpoints of e, and (for k >= 2) k-1 anchor vertices
/// `w_e^1..w_e^{k-1}`, adjacent to every tail of the same edge. Deleting a
/// p-clique of `g` strands the 2k-1 gadget vertices of each clique edge,
/// and nothing else ever collapses, which fixes the residual bound at
/// `|V'| - (p + (2k-1)·C(p,2))` with budget p.
///
/// Vertex layout: originals keep ids `0..n`; tail `u_e^i` is
/// `n + e·k + (i-1)`; anchor `w_e^i` is `n + m·k + e·(k-1) + (i-1)`, with
/// edges indexed by their position in the sorted normalized edge list.
///
/// Requires p <= n and minimum degree at least p + 1 in `g`.
pub fn clique_to_collapse(g: &Graph, p: usize, k: usize) -> Result<Instance, GeneratorError> {
    assert!(k >= 1, "clique_to_collapse requires k >= 1");
    let n = g.vertex_count();
    let m = g.edge_count();
    if p > n {
        return Err(GeneratorError::CliqueTooLarge { p, n });
    }
    for v in 0..n {
        if g.degree(v) < p + 1 {
            return Err(GeneratorError::DegreeTooSmall {
                vertex: v,
                degree: g.degree(v),
                required: p + 1,
            });
        }
    }

    let tail = |e: usize, i: usize| n + e * k + i;
    let anchor = |e: usize, i: usize| n + m * k + e * (k - 1) + i;
    let total = n + m * k + m * (k - 1);

    let mut edges = Vec::with_capacity(2 * m * k + m * k * (k - 1));
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        for i in 0..k {
            edges.push((a, tail(e, i)));
            edges.push((b, tail(e, i)));
            for j in 0..k - 1 {
                edges.push((tail(e, i), anchor(e, j)));
            }
        }
    }
    let graph = Graph::new(total, &edges).expect("gadget construction is simple");

    let protected = p + (2 * k - 1) * (p * (p - 1) / 2);
    debug_assert!(protected <= total);
    let x = total - protected;
    Ok(Instance::new(
        graph,
        p,
        x,
        k,
        format!("clique_to_collapse(p={p},k={k},n={n},m={m})"),
    ))
}

/// Input-row vertices of the OR gadget (the only degree-2 vertices).
pub const OR_GADGET_INPUTS: [usize; 2] = [0, 4];
/// Output vertex of the OR gadget.
pub const OR_GADGET_OUTPUT: usize = 7;

/// The 8-vertex, 11-edge OR gadget.
///
/// Layout: 0 and 4 are the input row. Both second-row vertices 1 and 5 are
/// adjacent to both inputs. The columns continue 1-2-3 and 5-6, vertex 3
/// also links across to 6, and the output `v^o = 7` is adjacent to 2, 3
/// and 6. Inputs have degree 2, every other vertex degree 3, so in
/// isolation the 3-core is empty; once the inputs are held at degree 3
/// from outside, deleting `v^o` collapses the whole gadget.
pub fn or_gadget() -> Graph {
    let edges = [
        (0, 1), (0, 5), (1, 4), (4, 5),
        (1, 2), (5, 6),
        (2, 3), (2, 7), (3, 6), (3, 7), (6, 7),
    ];
    Graph::new(8, &edges).expect("gadget is simple")
}

/// The OR gadget with each input vertex held up by one edge into its own
/// fresh K4 (vertices 8..12 and 12..16), raising the inputs to degree 3
/// without giving the gadget any other outside support.
pub fn or_gadget_boosted() -> Graph {
    let mut edges: Vec<(usize, usize)> = or_gadget().edges().to_vec();
    for (base, input) in [(8, OR_GADGET_INPUTS[0]), (12, OR_GADGET_INPUTS[1])] {
        for u in base..base + 4 {
            for v in u + 1..base + 4 {
                edges.push((u, v));
            }
        }
        edges.push((input, base));
    }
    Graph::new(16, &edges).expect("boosted gadget is simple")
}

/// SplitMix64. State advances by the golden-gamma constant; output is a
/// bijective mix of the new state:
///
/// ```text
/// state += 0x9E3779B97F4A7C15                      (mod 2^64)
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9         (mod 2^64)
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB         (mod 2^64)
/// output = z ^ (z >> 31)
/// ```
///
/// The seed is the initial state, used as-is. Bounded draws are
/// `next_u64() % bound`; the modulo bias is irrelevant at the bounds used
/// here and keeps ports trivial.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..bound`; `bound` must be positive.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "next_below requires a positive bound");
        self.next_u64() % bound
    }
}

/// First `m` entries of a Fisher-Yates shuffle of the lexicographic list of
/// all vertex pairs.
fn sample_edges(rng: &mut SplitMix64, n: usize, m: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    assert!(m <= pairs.len(), "cannot sample {m} edges from {} pairs", pairs.len());
    for i in 0..m {
        let j = i + rng.next_below((pairs.len() - i) as u64) as usize;
        pairs.swap(i, j);
    }
    pairs.truncate(m);
    pairs
}

/// Seeded random graph with exactly `n` vertices and `m` edges.
pub fn random_graph(seed: u64, n: usize, m: usize) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let edges = sample_edges(&mut rng, n, m);
    Graph::new(n, &edges).expect("sampled edges are distinct vertex pairs")
}

/// Seeded random instance for the property suites.
///
/// Draw order from a single SplitMix64 stream seeded with `seed`:
///
/// 1. `n = 1 + next_below(n_max)`
/// 2. `b = next_below(min(b_max, n) + 1)`
/// 3. `x = next_below(min(x_max, n) + 1)`
/// 4. `m = floor(density · n(n-1)/2)` with `density` clamped to `[0, 1]`,
///    then `m` edges sampled as in [`random_graph`].
pub fn random_instance(
    seed: u64,
    n_max: usize,
    density: f64,
    b_max: usize,
    x_max: usize,
    k: usize,
) -> Instance {
    assert!(n_max >= 1, "n_max must be positive");
    let mut rng = SplitMix64::new(seed);
    let n = 1 + rng.next_below(n_max as u64) as usize;
    let b = rng.next_below(b_max.min(n) as u64 + 1) as usize;
    let x = rng.next_below(x_max.min(n) as u64 + 1) as usize;
    let m = (density.clamp(0.0, 1.0) * (n * (n - 1) / 2) as f64).floor() as usize;
    let edges = sample_edges(&mut rng, n, m);
    let graph = Graph::new(n, &edges).expect("sampled edges are distinct vertex pairs");
    let label = format!("random(seed={seed},n={n},m={m},b={b},x={x},k={k})");
    Instance::new(graph, b, x, k, label)
}

//! Helpers shared by the integration suites.

#![allow(dead_code)]

use collapse_core::generators::{random_instance, Instance, SplitMix64};
use collapse_core::{Graph, VertexSet};

/// The standard randomized suite shape: n <= 10, m <= 18, b <= 3, x <= 3.
/// Densities cycle with the seed so sparse and moderately dense graphs both
/// appear; 0.4 * C(10,2) = 18 caps the edge count.
pub fn suite_instance(seed: u64, k: usize) -> Instance {
    const DENSITIES: [f64; 5] = [0.0, 0.1, 0.2, 0.3, 0.4];
    let density = DENSITIES[(seed % 5) as usize];
    random_instance(seed, 10, density, 3, 3, k)
}

pub fn assert_suite_shape(inst: &Instance) {
    let n = inst.graph.vertex_count();
    assert!(n <= 10, "suite instance too large: n = {n}");
    assert!(inst.graph.edge_count() <= 18);
    assert!(inst.b <= 3 && inst.x <= 3);
}

/// Reference peel that removes one random below-threshold vertex at a time
/// and recomputes all degrees from scratch after every removal. Slow and
/// order-randomized on purpose: it shares nothing with the production peel
/// beyond the definition of a k-core.
pub fn shuffled_core(g: &Graph, k: usize, deleted: &VertexSet, rng: &mut SplitMix64) -> VertexSet {
    let n = g.vertex_count();
    let mut alive: Vec<bool> = (0..n).map(|v| !deleted.contains(v)).collect();
    loop {
        let below: Vec<usize> = (0..n)
            .filter(|&v| {
                alive[v] && g.neighbors(v).iter().filter(|&&w| alive[w]).count() < k
            })
            .collect();
        if below.is_empty() {
            break;
        }
        alive[below[rng.next_below(below.len() as u64) as usize]] = false;
    }
    VertexSet::from_members(n, (0..n).filter(|&v| alive[v]))
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}

/// Two-colorability via BFS over every component.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut color = vec![None::<bool>; n];
    let mut queue = std::collections::VecDeque::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!color[v].unwrap());
                        queue.push_back(w);
                    }
                    Some(c) if c == color[v].unwrap() => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Subgraph induced on `keep`, with vertices relabeled to `0..keep.len()`
/// in ascending original-id order.
pub fn induce(g: &Graph, keep: &VertexSet) -> Graph {
    let ids: Vec<usize> = keep.to_vec();
    let rank: std::collections::HashMap<usize, usize> =
        ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|(u, v)| keep.contains(*u) && keep.contains(*v))
        .map(|&(u, v)| (rank[&u], rank[&v]))
        .collect();
    Graph::new(ids.len(), &edges).expect("induced subgraph is simple")
}

/// Does `g` contain a clique on `p` vertices? Plain subset enumeration.
pub fn has_clique(g: &Graph, p: usize) -> bool {
    let n = g.vertex_count();
    if p == 0 {
        return true;
    }
    if p > n {
        return false;
    }
    let mut combo: Vec<usize> = (0..p).collect();
    loop {
        let is_clique = combo.iter().enumerate().all(|(i, &u)| {
            combo[i + 1..]
                .iter()
                .all(|&v| g.neighbors(u).binary_search(&v).is_ok())
        });
        if is_clique {
            return true;
        }
        // advance to the lexicographic successor
        let mut i = p;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if combo[i] < n - p + i {
                combo[i] += 1;
                for j in i + 1..p {
                    combo[j] = combo[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return false;
        }
    }
}

//! Immutable undirected simple graphs with contiguous vertex ids.
//!
//! Construction validates the input: self-loops, duplicate edges and
//! out-of-range endpoints are rejected rather than silently repaired, so
//! corrupted inputs surface immediately. Once built, a graph never changes
//! and can be shared freely across threads.

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
}

/// An immutable undirected simple graph on vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and sorted; every adjacency list is
/// sorted ascending. Both orderings are relied on for deterministic peeling
/// and deterministic generator output.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Build a graph on `n` vertices from an edge list.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized (`u < v`), lexicographically sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components of the subgraph induced on `restrict`, sorted by
    /// size descending and then by smallest member ascending.
    pub fn components(&self, restrict: &VertexSet) -> Vec<VertexSet> {
        assert_eq!(restrict.universe(), self.n, "restrict set universe mismatch");
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for seed in restrict.iter() {
            if seen[seed] {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            seen[seed] = true;
            stack.push(seed);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in self.neighbors(v) {
                    if !seen[w] && restrict.contains(w) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out.sort_by(|a, b| {
            b.len()
                .cmp(&a.len())
                .then_with(|| a.min().cmp(&b.min()))
        });
        out
    }

    /// True iff every vertex of `comp` has degree exactly 2 inside `comp`.
    ///
    /// `comp` must be a connected component of the graph it was taken from;
    /// under that precondition this is exactly the "component is a single
    /// cycle" test.
    pub fn is_cycle_component(&self, comp: &VertexSet) -> bool {
        assert_eq!(comp.universe(), self.n, "component universe mismatch");
        !comp.is_empty()
            && comp.iter().all(|v| {
                self.neighbors(v).iter().filter(|&&w| comp.contains(w)).count() == 2
            })
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::new(self.n + other.n, &edges).expect("union of valid graphs is valid")
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is simple")
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle is simple")
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path is simple")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).expect("star is simple")
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes
    /// `i -- i+5`.
    pub fn petersen() -> Graph {
        let edges = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ];
        Graph::new(10, &edges).expect("petersen is simple")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

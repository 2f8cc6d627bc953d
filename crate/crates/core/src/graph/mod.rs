//! Finite simple graphs with dense bit-row adjacency.
//!
//! A [`Graph`] is immutable once built. Mutation goes through
//! [`GraphBuilder`], which checks the structural invariants (no loops,
//! in-range endpoints, labels only on edges) before handing out a graph.

mod algo;
mod io;
mod random;
mod symmetry;

pub use algo::{
    connected_components, four_cycle, girth, greedy_coloring, independence_number,
    independence_number_bounded, is_bipartite, maximal_independent_set, natural_order,
    odd_girth, power_graph, validate_homomorphism, Girth, IndependentSet,
    DEFAULT_INDEPENDENCE_BOUND,
};
pub use io::{read_graph, write_graph, GraphJson};
pub use random::{random_bounded_graph, random_forest};
pub use symmetry::TransitivityCertificate;

use std::collections::BTreeMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Subset of the vertex set.
pub type VertexSet = BitSet;

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    labels: BTreeMap<(usize, usize), u32>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .field("labels", &self.labels.len())
            .finish()
    }
}

#[inline]
fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
            labels: BTreeMap::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v).expect("in range");
            }
        }
        b.build()
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("in range")
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn label(&self, u: usize, v: usize) -> Option<u32> {
        self.labels.get(&ordered(u, v)).copied()
    }

    pub fn labels(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.labels
    }

    pub fn vertex_set(&self) -> VertexSet {
        BitSet::full(self.n)
    }

    /// Subgraph induced on `keep`, plus the map from new to old indices.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut b = GraphBuilder::new(old.len());
        for (i, &u) in old.iter().enumerate() {
            for v in self.adj[u].iter() {
                let j = new_of[v];
                if j != usize::MAX && i < j {
                    match self.label(u, v) {
                        Some(l) => b.add_labeled_edge(i, j, l),
                        None => b.add_edge(i, j),
                    }
                    .expect("in range");
                }
            }
        }
        (b.build(), old)
    }

    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v].complement();
            row.remove(v);
            adj.push(row);
        }
        Graph {
            n: self.n,
            adj,
            labels: BTreeMap::new(),
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut b = GraphBuilder::new(self.n + other.n);
        for (u, v) in self.edges() {
            b.add_edge(u, v).expect("in range");
        }
        for (u, v) in other.edges() {
            b.add_edge(u + shift, v + shift).expect("in range");
        }
        b.build()
    }

    /// Checks the structural invariants; graphs built through the public API
    /// always satisfy them.
    pub fn check_invariants(&self) -> Result<()> {
        if self.adj.len() != self.n {
            return Err(Error::InvalidGraph("row count differs from n".into()));
        }
        for u in 0..self.n {
            if self.adj[u].universe() != self.n {
                return Err(Error::InvalidGraph(format!("row {u} has wrong width")));
            }
            if self.adj[u].contains(u) {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return Err(Error::InvalidGraph(format!("asymmetric pair ({u},{v})")));
                }
            }
        }
        for &(u, v) in self.labels.keys() {
            if !self.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("label on non-edge ({u},{v})")));
            }
        }
        Ok(())
    }
}

/// Accumulates edges before freezing them into a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<BitSet>,
    labels: BTreeMap<(usize, usize), u32>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            adj: vec![BitSet::new(n); n],
            labels: BTreeMap::new(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u},{v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn add_labeled_edge(&mut self, u: usize, v: usize, label: u32) -> Result<()> {
        self.add_edge(u, v)?;
        self.labels.insert(ordered(u, v), label);
        Ok(())
    }

    /// Labels an edge that is already present.
    pub fn set_label(&mut self, u: usize, v: usize, label: u32) -> Result<()> {
        if u >= self.n || !self.adj[u].contains(v) {
            return Err(Error::InvalidGraph(format!("label on non-edge ({u},{v})")));
        }
        self.labels.insert(ordered(u, v), label);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj,
            labels: self.labels,
        }
    }
}

/// A total vertex coloring with colors in `0..palette_size`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Coloring {
    pub color: Vec<usize>,
    pub palette_size: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.color.len() == g.n()
            && self.color.iter().all(|&c| c < self.palette_size)
            && g.edges().all(|(u, v)| self.color[u] != self.color[v])
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = BitSet::new(self.palette_size.max(1));
        for &c in &self.color {
            if c < self.palette_size {
                seen.insert(c);
            }
        }
        seen.count()
    }
}

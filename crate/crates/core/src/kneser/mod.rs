//! Kneser graphs `K(n,k)` and Schrijver graphs `K'(n,k)`.
//!
//! Vertices are k-subsets of `{0..n-1}` listed in colex order, so vertex `i`
//! of `K(n,k)` is the subset of rank `i`. Two vertices are adjacent iff their
//! subsets are disjoint. `K'(n,k)` keeps only the cyclically stable subsets
//! (no two members differ by 1 mod n), still in colex order.

mod formulas;
mod subset;
mod symmetry;

pub use formulas::{
    canonical_kneser_coloring, fractional_chromatic_formula_kneser, kneser_chromatic_formula,
    kneser_odd_girth_formula, schrijver_vertex_count,
};
pub use subset::{binomial, binomial_big, KSubset, MAX_GROUND_SET};
pub use symmetry::{kneser_transitivity_certificate, symmetric_group_generators};

use serde::{Deserialize, Serialize};

use crate::error::{cap_check, Error, Result};
use crate::graph::{Graph, GraphBuilder};
use subset::{ground_mask, subsets_of};

/// Default cap on generated vertex counts.
pub const DEFAULT_VERTEX_CAP: u128 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Kneser,
    Schrijver,
}

#[derive(Clone, Debug)]
pub struct GenOptions {
    pub vertex_cap: u128,
    /// Permit `n < 2k`, which yields an edgeless graph.
    pub allow_degenerate: bool,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions {
            vertex_cap: DEFAULT_VERTEX_CAP,
            allow_degenerate: false,
        }
    }
}

/// A graph whose vertices are k-subsets, with the codec between the two.
#[derive(Clone, Debug)]
pub struct SubsetGraph {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub graph: Graph,
    vertices: Vec<KSubset>,
}

impl SubsetGraph {
    pub fn vertices(&self) -> &[KSubset] {
        &self.vertices
    }

    pub fn subset(&self, v: usize) -> KSubset {
        self.vertices[v]
    }

    pub fn index_of(&self, s: &KSubset) -> Option<usize> {
        if s.n() != self.n || s.k() != self.k {
            return None;
        }
        self.vertices.binary_search_by_key(&s.mask(), KSubset::mask).ok()
    }

    /// Vertex map induced by a permutation of the ground set, or `None` if
    /// some image is not a vertex of this graph.
    pub fn induced_map(&self, perm: &[usize]) -> Option<Vec<usize>> {
        self.vertices
            .iter()
            .map(|s| self.index_of(&s.permute(perm)))
            .collect()
    }
}

pub(crate) fn check_params(n: usize, k: usize, allow_degenerate: bool) -> Result<()> {
    if k == 0 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    if n > MAX_GROUND_SET {
        return Err(Error::BadParams(format!("n = {n} exceeds {MAX_GROUND_SET}")));
    }
    if n < k || (n < 2 * k && !allow_degenerate) {
        return Err(Error::BadParams(format!("need n >= 2k, got n = {n}, k = {k}")));
    }
    Ok(())
}

pub fn kneser_graph(n: usize, k: usize) -> Result<SubsetGraph> {
    kneser_graph_with(n, k, &GenOptions::default())
}

pub fn kneser_graph_with(n: usize, k: usize, opts: &GenOptions) -> Result<SubsetGraph> {
    check_params(n, k, opts.allow_degenerate)?;
    let count = binomial(n as u64, k as u64).expect("n <= 64");
    cap_check("Kneser vertex count", count, opts.vertex_cap)?;
    build(Family::Kneser, n, k, |_| true)
}

pub fn schrijver_graph(n: usize, k: usize) -> Result<SubsetGraph> {
    schrijver_graph_with(n, k, &GenOptions::default())
}

pub fn schrijver_graph_with(n: usize, k: usize, opts: &GenOptions) -> Result<SubsetGraph> {
    check_params(n, k, opts.allow_degenerate)?;
    // the stable sets are a subset of all k-sets; cap on the exact count when known
    let bound = if n >= 2 * k {
        u128::try_from(&schrijver_vertex_count(n as u64, k as u64)?).unwrap_or(u128::MAX)
    } else {
        0
    };
    cap_check("Schrijver vertex count", bound, opts.vertex_cap)?;
    build(Family::Schrijver, n, k, |s| s.is_cyclically_stable())
}

fn build(family: Family, n: usize, k: usize, keep: impl Fn(&KSubset) -> bool) -> Result<SubsetGraph> {
    let vertices: Vec<KSubset> = subsets_of(ground_mask(n), k)
        .map(|m| KSubset::from_mask(n, m).expect("in ground set"))
        .filter(|s| keep(s))
        .collect();
    let mut sg = SubsetGraph {
        family,
        n,
        k,
        graph: Graph::empty(0),
        vertices,
    };
    let mut b = GraphBuilder::new(sg.vertices.len());
    for (i, s) in sg.vertices.iter().enumerate() {
        let rest = ground_mask(n) & !s.mask();
        for m in subsets_of(rest, k) {
            if m <= s.mask() {
                continue;
            }
            let t = KSubset::from_mask(n, m).expect("in ground set");
            if let Some(j) = sg.index_of(&t) {
                b.add_edge(i, j)?;
            }
        }
    }
    sg.graph = b.build();
    Ok(sg)
}

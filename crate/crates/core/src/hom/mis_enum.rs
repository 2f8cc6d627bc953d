//! Maximal independent sets by Bron-Kerbosch with pivoting, run on the
//! non-adjacency relation.

use crate::bitset::BitSet;
use crate::error::{cap_check, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_MIS_CAP: usize = 1_000_000;

pub fn enumerate_maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_maximal_independent_sets_capped(g, DEFAULT_MIS_CAP)
}

/// All inclusion-maximal independent sets, sorted by their member lists.
pub fn enumerate_maximal_independent_sets_capped(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let nonadj: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut row = g.neighbors(v).complement();
            row.remove(v);
            row
        })
        .collect();
    let mut out = Vec::new();
    let mut bk = BronKerbosch {
        nonadj: &nonadj,
        out: &mut out,
        cap,
        overflow: false,
    };
    bk.expand(BitSet::new(n), BitSet::full(n), BitSet::new(n));
    if bk.overflow {
        cap_check("maximal independent set count", cap as u128 + 1, cap as u128)?;
    }
    out.sort_by_cached_key(|s| s.to_vec());
    Ok(out)
}

struct BronKerbosch<'a> {
    nonadj: &'a [BitSet],
    out: &'a mut Vec<VertexSet>,
    cap: usize,
    overflow: bool,
}

impl BronKerbosch<'_> {
    fn expand(&mut self, r: BitSet, mut p: BitSet, mut x: BitSet) {
        if self.overflow {
            return;
        }
        if p.is_empty() {
            if x.is_empty() {
                if self.out.len() == self.cap {
                    self.overflow = true;
                    return;
                }
                self.out.push(r);
            }
            return;
        }
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| (p.intersection_count(&self.nonadj[u]), std::cmp::Reverse(u)))
            .expect("p nonempty");
        let todo = p.difference(&self.nonadj[pivot]);
        for v in todo.iter() {
            let mut r2 = r.clone();
            r2.insert(v);
            self.expand(r2, p.intersection(&self.nonadj[v]), x.intersection(&self.nonadj[v]));
            p.remove(v);
            x.insert(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::kneser::kneser_graph;

    /// Maximal independent sets by checking every subset.
    fn brute(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.n();
        let indep = |m: u32| g.edges().all(|(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0);
        let mut out: Vec<Vec<usize>> = (0u32..1 << n)
            .filter(|&m| indep(m) && (0..n).all(|v| m >> v & 1 == 1 || !indep(m | 1 << v)))
            .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
            .collect();
        out.sort();
        out
    }

    fn as_lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
        sets.iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn triangle_gives_singletons() {
        let sets = enumerate_maximal_independent_sets(&Graph::complete(3)).unwrap();
        assert_eq!(as_lists(&sets), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn five_cycle() {
        let c5 = Graph::cycle(5).unwrap();
        let sets = enumerate_maximal_independent_sets(&c5).unwrap();
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.count() == 2));
        assert_eq!(as_lists(&sets), brute(&c5));
    }

    #[test]
    fn petersen_counts() {
        let p = kneser_graph(5, 2).unwrap().graph;
        let sets = enumerate_maximal_independent_sets(&p).unwrap();
        assert_eq!(sets.len(), 15);
        assert_eq!(sets.iter().filter(|s| s.count() == 4).count(), 5);
        assert_eq!(sets.iter().filter(|s| s.count() == 3).count(), 10);
        assert_eq!(as_lists(&sets), brute(&p));
    }

    #[test]
    fn cap_is_enforced() {
        let p = kneser_graph(5, 2).unwrap().graph;
        assert!(matches!(
            enumerate_maximal_independent_sets_capped(&p, 14),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(enumerate_maximal_independent_sets_capped(&p, 15).unwrap().len(), 15);
    }

    #[test]
    fn edgeless_graph_has_one_set() {
        let sets = enumerate_maximal_independent_sets(&Graph::empty(3)).unwrap();
        assert_eq!(as_lists(&sets), vec![vec![0, 1, 2]]);
        let none = enumerate_maximal_independent_sets(&Graph::empty(0)).unwrap();
        assert_eq!(none.len(), 1);
    }
}

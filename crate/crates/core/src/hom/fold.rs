use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kneser::{KSubset, MAX_GROUND_SET};

/// A k-fold coloring with colors `0..palette`: every vertex holds exactly `k`
/// colors and the sets of adjacent vertices are disjoint. Equivalently a
/// homomorphism into `K(palette, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldColoring {
    pub palette: usize,
    pub k: usize,
    /// Sorted color set of each vertex.
    pub sets: Vec<Vec<usize>>,
}

impl FoldColoring {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.sets.len() != g.n() {
            return Err(Error::CertificateInvalid(format!(
                "{} color sets for {} vertices",
                self.sets.len(),
                g.n()
            )));
        }
        for (v, s) in self.sets.iter().enumerate() {
            if s.len() != self.k {
                return Err(Error::CertificateInvalid(format!(
                    "vertex {v} has {} colors, expected {}",
                    s.len(),
                    self.k
                )));
            }
            if s.windows(2).any(|w| w[0] >= w[1]) || s.last().is_some_and(|&c| c >= self.palette) {
                return Err(Error::CertificateInvalid(format!(
                    "vertex {v} has a malformed color set {s:?}"
                )));
            }
        }
        for (u, v) in g.edges() {
            if !disjoint_sorted(&self.sets[u], &self.sets[v]) {
                return Err(Error::CertificateInvalid(format!("edge ({u},{v}) shares a color")));
            }
        }
        Ok(())
    }

    /// `palette / k` as the rate of the coloring.
    pub fn ratio(&self) -> (usize, usize) {
        (self.palette, self.k)
    }

    /// Colex rank of each vertex's set, i.e. its image vertex in `K(palette, k)`.
    pub fn kneser_ranks(&self) -> Result<Vec<usize>> {
        if self.palette > MAX_GROUND_SET {
            return Err(Error::BadParams(format!(
                "palette {} exceeds {MAX_GROUND_SET}",
                self.palette
            )));
        }
        self.sets
            .iter()
            .map(|s| Ok(KSubset::from_members(self.palette, s)?.rank() as usize))
            .collect()
    }
}

fn disjoint_sorted(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_homomorphism;
    use crate::kneser::kneser_graph;

    #[test]
    fn validation() {
        let c5 = Graph::cycle(5).unwrap();
        let sets: Vec<Vec<usize>> = (0..5).map(|i| {
            let mut s = vec![2 * i % 5, (2 * i + 1) % 5];
            s.sort();
            s
        }).collect();
        let f = FoldColoring { palette: 5, k: 2, sets };
        f.validate(&c5).unwrap();
        let ranks = f.kneser_ranks().unwrap();
        assert!(validate_homomorphism(&c5, &kneser_graph(5, 2).unwrap().graph, &ranks));

        let mut bad = f.clone();
        bad.sets[1] = bad.sets[0].clone();
        assert!(bad.validate(&c5).is_err());
        let mut short = f.clone();
        short.sets[0].pop();
        assert!(short.validate(&c5).is_err());
        let mut wide = f;
        wide.palette = 3;
        assert!(wide.validate(&c5).is_err());
    }
}

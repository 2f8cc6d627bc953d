use super::Graph;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Vertex permutations claimed to generate a vertex-transitive group of
/// automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityCertificate {
    pub generators: Vec<Vec<usize>>,
}

impl TransitivityCertificate {
    pub fn new(generators: Vec<Vec<usize>>) -> Self {
        TransitivityCertificate { generators }
    }

    /// Rotation of `Graph::cycle(n)`.
    pub fn cyclic(n: usize) -> Self {
        TransitivityCertificate {
            generators: vec![(0..n).map(|i| (i + 1) % n).collect()],
        }
    }

    /// Checks that every generator is an automorphism of `g` and that the
    /// orbit of vertex 0 is the whole vertex set.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        for (i, p) in self.generators.iter().enumerate() {
            if p.len() != n {
                return Err(Error::CertificateInvalid(format!("generator {i} has wrong length")));
            }
            let mut hit = BitSet::new(n);
            if !p.iter().all(|&x| x < n && hit.insert(x)) {
                return Err(Error::CertificateInvalid(format!("generator {i} is not a permutation")));
            }
            if !g.edges().all(|(u, v)| g.has_edge(p[u], p[v])) {
                return Err(Error::CertificateInvalid(format!("generator {i} is not an automorphism")));
            }
        }
        if n == 0 {
            return Ok(());
        }
        let orbit = self.orbit(0, n);
        if orbit.count() != n {
            return Err(Error::CertificateInvalid(format!(
                "orbit of vertex 0 has {} of {n} vertices",
                orbit.count()
            )));
        }
        Ok(())
    }

    /// Orbit of `v` under the group generated by the (assumed valid) generators.
    pub fn orbit(&self, v: usize, n: usize) -> BitSet {
        let mut orbit = BitSet::new(n);
        orbit.insert(v);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for p in &self.generators {
                let y = p[x];
                if orbit.insert(y) {
                    stack.push(y);
                }
            }
        }
        orbit
    }
}

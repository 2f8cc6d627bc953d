//! Vertex transitivity of `K(n,k)` through the action of the symmetric group
//! on the ground set. Certificates come from this action, never from a
//! generic automorphism search.

use super::SubsetGraph;
use crate::error::{Error, Result};
use crate::graph::TransitivityCertificate;

/// The transposition `(0 1)` and the cycle `(0 1 ... n-1)`.
pub fn symmetric_group_generators(n: usize) -> Vec<Vec<usize>> {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(swap);
        gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    gens
}

pub fn kneser_transitivity_certificate(g: &SubsetGraph) -> Result<TransitivityCertificate> {
    let generators = symmetric_group_generators(g.n)
        .iter()
        .map(|p| {
            g.induced_map(p)
                .ok_or_else(|| Error::CertificateInvalid("permutation leaves the vertex set".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TransitivityCertificate::new(generators))
}

//! Fractional chromatic number as an exact covering LP.
//!
//! `chi*(G) = min sum_S x_S` over independent sets `S`, subject to
//! `sum_{S ∋ v} x_S >= 1` for every vertex and `x >= 0`.
//!
//! Only maximal independent sets are used as columns. This loses nothing:
//! given any feasible `x`, moving the weight of each `S` onto a maximal
//! superset keeps every coverage sum at least as large and the objective
//! unchanged, so some optimum is supported on maximal sets. Dually, an
//! optimal vertex weighting `y` is feasible against every independent set as
//! soon as it is feasible against the maximal ones, because `y >= 0`.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::fold::FoldColoring;
use super::lp::{LinearProgram, Relation};
use super::mis_enum::{enumerate_maximal_independent_sets_capped, DEFAULT_MIS_CAP};
use crate::error::{Error, Result};
use crate::graph::{independence_number, Graph, TransitivityCertificate, VertexSet};
use crate::rational::Rational;

/// Optimal solution of the covering LP with a matching dual.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalCertificate {
    pub value: Rational,
    /// Independent sets carrying positive weight.
    pub sets: Vec<VertexSet>,
    pub weights: Vec<Rational>,
    /// Vertex weights of total `value` that put at most 1 on every
    /// independent set.
    pub dual: Vec<Rational>,
}

impl FractionalCertificate {
    /// Re-checks primal feasibility, dual feasibility and equal objectives,
    /// which together prove optimality.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        self.verify_primal(g)?;
        let n = g.n();
        if self.dual.len() != n || self.dual.iter().any(Signed::is_negative) {
            return Err(Error::CertificateInvalid("dual weights malformed".into()));
        }
        let dual_total = self.dual.iter().fold(Rational::zero(), |a, y| a + y);
        if dual_total != self.value {
            return Err(Error::CertificateInvalid(format!(
                "dual objective {dual_total} differs from {}",
                self.value
            )));
        }
        for s in enumerate_maximal_independent_sets_capped(g, DEFAULT_MIS_CAP)? {
            let load = s.iter().fold(Rational::zero(), |a, v| a + &self.dual[v]);
            if load > Rational::one() {
                return Err(Error::CertificateInvalid(format!(
                    "dual puts {load} on independent set {:?}",
                    s.to_vec()
                )));
            }
        }
        Ok(())
    }

    fn verify_primal(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        if self.sets.len() != self.weights.len() {
            return Err(Error::CertificateInvalid("sets and weights differ in length".into()));
        }
        let mut cover = vec![Rational::zero(); n];
        for (s, w) in self.sets.iter().zip(&self.weights) {
            if s.universe() != n || !w.is_positive() {
                return Err(Error::CertificateInvalid("bad set or weight".into()));
            }
            if s.iter().any(|v| g.neighbors(v).intersects(s)) {
                return Err(Error::CertificateInvalid(format!("set {:?} is not independent", s.to_vec())));
            }
            for v in s.iter() {
                cover[v] += w;
            }
        }
        if let Some(v) = cover.iter().position(|c| *c < Rational::one()) {
            return Err(Error::CertificateInvalid(format!("vertex {v} is under-covered")));
        }
        let total = self.weights.iter().fold(Rational::zero(), |a, w| a + w);
        if total != self.value {
            return Err(Error::CertificateInvalid(format!(
                "weights sum to {total}, not {}",
                self.value
            )));
        }
        Ok(())
    }
}

pub fn fractional_chromatic_lp(g: &Graph) -> Result<FractionalCertificate> {
    fractional_chromatic_lp_capped(g, DEFAULT_MIS_CAP)
}

pub fn fractional_chromatic_lp_capped(g: &Graph, mis_cap: usize) -> Result<FractionalCertificate> {
    let n = g.n();
    let columns = enumerate_maximal_independent_sets_capped(g, mis_cap)?;
    let mut lp = LinearProgram::new(columns.len());
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
    for (j, s) in columns.iter().enumerate() {
        lp.set_cost(j, Rational::one());
        for v in s.iter() {
            rows[v].push((j, Rational::one()));
        }
    }
    for row in rows {
        lp.add_constraint(row, Relation::Ge, Rational::one());
    }
    let sol = lp.solve()?;
    let (sets, weights) = columns
        .into_iter()
        .zip(sol.x)
        .filter(|(_, w)| w.is_positive())
        .unzip();
    let cert = FractionalCertificate {
        value: sol.value,
        sets,
        weights,
        dual: sol.duals,
    };
    debug_assert!(cert.verify_primal(g).is_ok());
    Ok(cert)
}

/// `alpha(G) / |V(G)|`.
pub fn independence_ratio(g: &Graph) -> Result<Rational> {
    if g.n() == 0 {
        return Err(Error::BadParams("independence ratio of the empty graph".into()));
    }
    let a = independence_number(g)?;
    Ok(Rational::new((a.size as i64).into(), (g.n() as i64).into()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FractionalBoundReport {
    #[serde(serialize_with = "ser_rational")]
    pub chi_frac: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub inverse_alpha: Rational,
    /// `chi_frac >= 1/alpha`.
    pub inequality_holds: bool,
    /// Whether the transitivity certificate was checked.
    pub transitive: bool,
    /// Set only when `transitive`: `chi_frac == 1/alpha`.
    pub equality_holds: Option<bool>,
}

impl FractionalBoundReport {
    pub fn passed(&self) -> bool {
        self.inequality_holds && self.equality_holds != Some(false)
    }
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::rational::display(r))
}

/// Compares `chi*(G)` with `1/alpha(G)`. With a transitivity certificate
/// (verified first) the two must coincide.
pub fn check_fractional_bound(g: &Graph, transitivity: Option<&TransitivityCertificate>) -> Result<FractionalBoundReport> {
    let chi = fractional_chromatic_lp(g)?.value;
    let inv = independence_ratio(g)?.recip();
    let transitive = match transitivity {
        Some(cert) => {
            cert.verify(g)?;
            true
        }
        None => false,
    };
    Ok(FractionalBoundReport {
        inequality_holds: chi >= inv,
        equality_holds: transitive.then(|| chi == inv),
        transitive,
        chi_frac: chi,
        inverse_alpha: inv,
    })
}

/// Scales the LP weights to integers with their common denominator `D`.
/// Each independent set `S` then receives `D * x_S` private colors, and
/// every vertex keeps the first `D` colors whose sets contain it. The result
/// is a `D`-fold `(value * D)`-coloring.
pub fn kfold_from_lp(g: &Graph, cert: &FractionalCertificate) -> Result<FoldColoring> {
    cert.verify_primal(g)?;
    let denom = cert
        .weights
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let to_usize = |r: Rational, what: &str| -> Result<usize> {
        r.to_integer()
            .to_usize()
            .ok_or_else(|| Error::CertificateInvalid(format!("{what} too large")))
    };
    let k = to_usize(Rational::from_integer(denom.clone()), "common denominator")?;
    let palette = to_usize(&cert.value * &denom, "palette")?;
    let mut sets: Vec<Vec<usize>> = vec![Vec::with_capacity(k); g.n()];
    let mut next = 0usize;
    for (s, w) in cert.sets.iter().zip(&cert.weights) {
        let copies = to_usize(w * &denom, "multiplicity")?;
        for c in next..next + copies {
            for v in s.iter() {
                if sets[v].len() < k {
                    sets[v].push(c);
                }
            }
        }
        next += copies;
    }
    debug_assert_eq!(next, palette);
    let fold = FoldColoring { palette, k, sets };
    fold.validate(g)?;
    Ok(fold)
}

//! Closed-form invariants of Kneser and Schrijver graphs.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;

use super::subset::{binomial, ground_mask, subsets_of};
use super::{check_params, KSubset, DEFAULT_VERTEX_CAP};
use crate::error::{cap_check, Error, Result};
use crate::graph::Coloring;
use crate::rational::Rational;

fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::BadParams("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `1 + 2 * ceil(k / (n - 2k))` for `n > 2k`.
pub fn kneser_odd_girth_formula(n: u64, k: u64) -> Result<u64> {
    require_k(k as usize)?;
    if n <= 2 * k {
        return Err(Error::BadParams(format!("odd girth formula needs n > 2k, got n = {n}, k = {k}")));
    }
    Ok(1 + 2 * k.div_ceil(n - 2 * k))
}

/// `n - 2k + 2` for `n >= 2k`.
pub fn kneser_chromatic_formula(n: u64, k: u64) -> Result<u64> {
    require_k(k as usize)?;
    if n < 2 * k {
        return Err(Error::BadParams(format!("need n >= 2k, got n = {n}, k = {k}")));
    }
    Ok(n - 2 * k + 2)
}

/// `n / k` in lowest terms for `n >= 2k`.
pub fn fractional_chromatic_formula_kneser(n: u64, k: u64) -> Result<Rational> {
    require_k(k as usize)?;
    if n < 2 * k {
        return Err(Error::BadParams(format!("need n >= 2k, got n = {n}, k = {k}")));
    }
    Ok(Rational::new(BigInt::from(n), BigInt::from(k)))
}

/// Number of cyclically stable k-subsets of `Z_n`.
///
/// For `n > 2k` this is `(n/k) * C(n-k-1, k-1)`: pick a starting member, then
/// the k-1 gaps to the following members are positive and sum to at most
/// `n-k-1`, and each set is counted once per member. At `n = 2k` the two
/// alternating sets are the only stable ones.
pub fn schrijver_vertex_count(n: u64, k: u64) -> Result<BigUint> {
    require_k(k as usize)?;
    if n < 2 * k {
        return Err(Error::BadParams(format!("need n >= 2k, got n = {n}, k = {k}")));
    }
    if n == 2 * k {
        return Ok(BigUint::from(2u32));
    }
    let numer = BigUint::from(n) * super::binomial_big(n - k - 1, k - 1);
    let (q, r) = numer.div_rem(&BigUint::from(k));
    debug_assert_eq!(r, BigUint::from(0u32));
    Ok(q)
}

/// Proper `(n-2k+2)`-coloring of `K(n,k)`, indexed by colex rank:
/// a set gets `min(min(A), n-2k+1)`. The top class holds sets inside the
/// last `2k-1` points, which pairwise intersect.
pub fn canonical_kneser_coloring(n: usize, k: usize) -> Result<Coloring> {
    check_params(n, k, false)?;
    let count = binomial(n as u64, k as u64).expect("n <= 64");
    cap_check("Kneser vertex count", count, DEFAULT_VERTEX_CAP)?;
    let top = n - 2 * k + 1;
    let color = subsets_of(ground_mask(n), k)
        .map(|m| {
            let s = KSubset::from_mask(n, m).expect("in ground set");
            s.least().expect("k >= 1").min(top)
        })
        .collect();
    Ok(Coloring {
        color,
        palette_size: top + 1,
    })
}

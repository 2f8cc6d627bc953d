use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::word::ReducedWord;
use crate::error::{cap_check, Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Default cap on enumerated words.
pub const DEFAULT_WORD_CAP: u128 = 1_000_000;

/// Number of reduced words of length exactly `l`: `1`, then `d (d-1)^(l-1)`.
pub fn sphere_size(d: usize, l: usize) -> BigUint {
    if l == 0 {
        BigUint::one()
    } else {
        BigUint::from(d) * BigUint::from(d - 1).pow(l as u32 - 1)
    }
}

/// Number of reduced words of length at most `r`.
pub fn ball_size(d: usize, r: usize) -> BigUint {
    (0..=r).map(|l| sphere_size(d, l)).sum()
}

fn check_d(d: usize) -> Result<()> {
    if !(2..=u8::MAX as usize).contains(&d) {
        return Err(Error::BadParams(format!("need 2 <= d <= 255, got {d}")));
    }
    Ok(())
}

fn capped(size: &BigUint, what: &str, cap: u128) -> Result<usize> {
    let n = size.to_u128().unwrap_or(u128::MAX);
    cap_check(what, n, cap)?;
    Ok(n as usize)
}

/// The radius-`r` ball of the Cayley graph around the identity: words of
/// length at most `r`, with `w ~ w a_i` labeled `i`.
#[derive(Clone, Debug)]
pub struct CayleyBall {
    pub d: usize,
    pub radius: usize,
    pub graph: Graph,
    /// Words in breadth-first order: by length, then by the order in which
    /// they were generated (parent order, then letter).
    pub words: Vec<ReducedWord>,
    index: HashMap<Vec<u8>, usize>,
}

impl CayleyBall {
    pub fn index_of(&self, w: &ReducedWord) -> Option<usize> {
        self.index.get(w.letters()).copied()
    }
}

pub fn cayley_ball(d: usize, r: usize) -> Result<CayleyBall> {
    cayley_ball_capped(d, r, DEFAULT_WORD_CAP)
}

pub fn cayley_ball_capped(d: usize, r: usize, cap: u128) -> Result<CayleyBall> {
    check_d(d)?;
    let n = capped(&ball_size(d, r), "Cayley ball size", cap)?;
    let mut words = Vec::with_capacity(n);
    let mut index = HashMap::with_capacity(n);
    let mut b = GraphBuilder::new(n);
    words.push(ReducedWord::identity(d));
    index.insert(Vec::new(), 0);
    let mut start = 0;
    for _ in 0..r {
        let end = words.len();
        for p in start..end {
            for i in 0..d as u8 {
                if words[p].last() == Some(i) {
                    continue;
                }
                let w = words[p].times_generator(i);
                let id = words.len();
                index.insert(w.letters().to_vec(), id);
                words.push(w);
                b.add_labeled_edge(p, id, i as u32)?;
            }
        }
        start = end;
    }
    debug_assert_eq!(words.len(), n);
    Ok(CayleyBall {
        d,
        radius: r,
        graph: b.build(),
        words,
        index,
    })
}

/// All reduced words of length exactly `l + 1`.
#[derive(Clone, Debug, Serialize)]
pub struct SphereSet {
    pub d: usize,
    pub l: usize,
    pub words: Vec<ReducedWord>,
}

pub fn sphere(d: usize, l: usize) -> Result<SphereSet> {
    sphere_capped(d, l, DEFAULT_WORD_CAP)
}

/// Words in lexicographic order of their letters.
pub fn sphere_capped(d: usize, l: usize, cap: u128) -> Result<SphereSet> {
    check_d(d)?;
    let expected = capped(&sphere_size(d, l + 1), "sphere size", cap)?;
    let mut words = Vec::with_capacity(expected);
    let mut current = Vec::with_capacity(l + 1);
    extend_words(d, l + 1, &mut current, &mut words);
    assert_eq!(words.len(), expected, "sphere count must be d(d-1)^l");
    Ok(SphereSet { d, l, words })
}

fn extend_words(d: usize, len: usize, current: &mut Vec<u8>, out: &mut Vec<ReducedWord>) {
    if current.len() == len {
        out.push(ReducedWord::new(d, current.clone()).expect("built reduced"));
        return;
    }
    for i in 0..d as u8 {
        if current.last() != Some(&i) {
            current.push(i);
            extend_words(d, len, current, out);
            current.pop();
        }
    }
}

/// `sigma = tau a_{i_l} tau^-1` for `tau = a_{i_0} ... a_{i_l}`, together
/// with its suffix chain `sigma_j` (the `j` rightmost letters).
#[derive(Clone, Debug, Serialize)]
pub struct SigmaCircuit {
    pub tau: ReducedWord,
    pub sigma: ReducedWord,
    pub chain: Vec<ReducedWord>,
}

pub fn sigma_circuit(tau: &ReducedWord) -> Result<SigmaCircuit> {
    let last = tau
        .last()
        .ok_or_else(|| Error::BadParams("tau must be nonempty".into()))?;
    // a_{i_0} .. a_{i_l} .. a_{i_0}: the doubled middle letter cancels once
    let mut letters = tau.letters().to_vec();
    letters.extend(tau.letters().iter().rev().skip(1));
    let sigma = ReducedWord::new(tau.d(), letters)?;
    debug_assert_eq!(sigma, tau.times_generator(last).mul(&tau.inverse()));
    let chain = (0..=sigma.len()).map(|j| sigma.suffix(j)).collect();
    Ok(SigmaCircuit {
        tau: tau.clone(),
        sigma,
        chain,
    })
}

impl SigmaCircuit {
    pub fn length(&self) -> usize {
        self.sigma.len()
    }

    /// Checks that `sigma` is a reduced involution of length `2l+1`, that
    /// each step of the suffix chain multiplies by one generator on the
    /// left, and that the inverted chain (the prefixes of the palindrome
    /// `sigma`) steps along Cayley edges `w ~ w a_i` from 1 to `sigma`.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::CertificateInvalid(msg));
        let Some(l) = self.tau.len().checked_sub(1) else {
            return fail("tau is empty".into());
        };
        if ReducedWord::new(self.sigma.d(), self.sigma.letters().to_vec()).is_err() {
            return fail("sigma is not reduced".into());
        }
        if self.sigma.len() != 2 * l + 1 {
            return fail(format!("sigma has length {}, expected {}", self.sigma.len(), 2 * l + 1));
        }
        if !self.sigma.mul(&self.sigma).is_identity() {
            return fail("sigma is not an involution".into());
        }
        if self.chain.len() != 2 * l + 2 || !self.chain[0].is_identity() || self.chain[2 * l + 1] != self.sigma {
            return fail("chain endpoints are wrong".into());
        }
        for (j, pair) in self.chain.windows(2).enumerate() {
            let (a, b) = (&pair[0], &pair[1]);
            if b.len() != j + 1 || b.mul(&a.inverse()).len() != 1 {
                return fail(format!("suffix step {j} is not a single left generator"));
            }
            let (pa, pb) = (a.inverse(), b.inverse());
            if pa != self.sigma.prefix(j) || pa.inverse().mul(&pb).len() != 1 {
                return fail(format!("prefix step {j} is not a Cayley edge"));
            }
        }
        Ok(())
    }
}

//! Finite-depth model of the dense-flip graph on binary strings.
//!
//! A string of length `L` is a `u64` whose bit `n` is the string's `n`-th
//! symbol. The family fixes labels `e(n) < d` and strings `s_n` of length `n`
//! for `n < L`. Two strings are adjacent when they differ in exactly one
//! position `n` and `s_n` is a prefix of both; the edge carries label `e(n)`.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{cap_check, Error, Result};

/// Longest supported string length.
pub const MAX_DEPTH: usize = 63;
/// Largest `L` for exhaustive scans over all of `2^L`.
pub const EXHAUSTIVE_DEPTH: usize = 24;

fn mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

fn is_prefix(s: u64, len: usize, x: u64) -> bool {
    x & mask(len) == s
}

#[derive(Clone, Debug, Serialize)]
pub struct DenseFamily {
    pub l: usize,
    pub d: usize,
    pub seed: u64,
    /// Every string of length at most this is extended by some `s_n` of
    /// each label.
    pub density_depth: usize,
    pub e: Vec<usize>,
    /// `s[n]` holds `n` bits.
    pub s: Vec<u64>,
}

/// Largest `D` with `D + d 2^D <= L`.
pub fn max_density_depth(l: usize, d: usize) -> Option<usize> {
    (0..MAX_DEPTH)
        .take_while(|&depth| depth + d.saturating_mul(1usize << depth) <= l)
        .last()
}

/// The deepest family that fits in length `L`; needs `L >= 2d`.
pub fn build_dense_family(l: usize, d: usize, seed: u64) -> Result<DenseFamily> {
    if l < 2 * d {
        return Err(Error::Infeasible(format!("length {l} leaves no room for {d} labels (need L >= {})", 2 * d)));
    }
    let depth = max_density_depth(l, d).expect("L >= 2d admits depth 0");
    build_dense_family_with_depth(l, d, depth, seed)
}

/// Indices below `D` get round-robin labels and random strings. From `D`
/// on, each label in turn receives every string of length `D`, in a seeded
/// order, padded with random bits to the index length.
pub fn build_dense_family_with_depth(l: usize, d: usize, depth: usize, seed: u64) -> Result<DenseFamily> {
    if d == 0 || l == 0 || l > MAX_DEPTH {
        return Err(Error::BadParams(format!("need d >= 1 and 1 <= L <= {MAX_DEPTH}, got L = {l}, d = {d}")));
    }
    let needed = depth.checked_add(d.saturating_mul(1usize << depth.min(MAX_DEPTH)));
    if depth >= MAX_DEPTH || needed.map_or(true, |n| n > l) {
        return Err(Error::Infeasible(format!("density depth {depth} needs L >= D + d 2^D, got L = {l}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_bits = |n: usize, rng: &mut ChaCha8Rng| if n == 0 { 0 } else { rng.gen::<u64>() & mask(n) };
    let mut e = Vec::with_capacity(l);
    let mut s = Vec::with_capacity(l);
    for n in 0..depth {
        e.push(n % d);
        s.push(random_bits(n, &mut rng));
    }
    let targets: Vec<Vec<u64>> = (0..d)
        .map(|_| {
            let mut t: Vec<u64> = (0..1u64 << depth).collect();
            t.shuffle(&mut rng);
            t
        })
        .collect();
    let mut n = depth;
    for round in 0..1usize << depth {
        for (i, t) in targets.iter().enumerate() {
            e.push(i);
            s.push(t[round] | (random_bits(n - depth, &mut rng) << depth));
            n += 1;
        }
    }
    while n < l {
        e.push(n % d);
        s.push(random_bits(n, &mut rng));
        n += 1;
    }
    let fam = DenseFamily {
        l,
        d,
        seed,
        density_depth: depth,
        e,
        s,
    };
    check_density(&fam)?;
    Ok(fam)
}

/// Every `t` with `|t| <= density_depth` and every label `i` has some `n`
/// with `e(n) = i` and `t` a prefix of `s_n`.
pub fn check_density(fam: &DenseFamily) -> Result<()> {
    for len in 0..=fam.density_depth {
        for t in 0..1u64 << len {
            for i in 0..fam.d {
                let found = (len..fam.l).any(|n| fam.e[n] == i && is_prefix(t, len, fam.s[n]));
                if !found {
                    return Err(Error::CertificateInvalid(format!(
                        "no s_n with label {i} extends the string {t:0len$b} of length {len}"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FlipEdge {
    pub x: u64,
    pub y: u64,
    pub position: usize,
    pub label: usize,
}

fn check_string(fam: &DenseFamily, x: u64) {
    assert!(x >> fam.l == 0, "string wider than L = {}", fam.l);
}

/// All edges at `x`, by increasing position.
pub fn g0_edges_at_depth(fam: &DenseFamily, x: u64) -> Vec<FlipEdge> {
    check_string(fam, x);
    (0..fam.l)
        .filter(|&n| is_prefix(fam.s[n], n, x))
        .map(|n| FlipEdge {
            x,
            y: x ^ (1 << n),
            position: n,
            label: fam.e[n],
        })
        .collect()
}

/// The `m`-th position `n` (from 0) with `e(n) = i` and `s_n` a prefix of `x`.
pub fn flip_position(fam: &DenseFamily, i: usize, m: usize, x: u64) -> Option<usize> {
    check_string(fam, x);
    (0..fam.l)
        .filter(|&n| fam.e[n] == i && is_prefix(fam.s[n], n, x))
        .nth(m)
}

/// `f_{i,m}(x)`, or `None` when `x` has fewer than `m+1` witnesses below `L`.
pub fn flip_map(fam: &DenseFamily, i: usize, m: usize, x: u64) -> Option<u64> {
    flip_position(fam, i, m, x).map(|n| x ^ (1 << n))
}

fn exhaustive_range(fam: &DenseFamily) -> Result<u64> {
    cap_check("strings scanned", 1u128 << fam.l, 1u128 << EXHAUSTIVE_DEPTH)?;
    Ok(1u64 << fam.l)
}

/// Summary of one exhaustive scan.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FlipScan {
    pub i: usize,
    pub m: usize,
    pub strings: u64,
    pub defined: u64,
}

/// `f_{i,m}` is an involution wherever defined, and the edge it follows
/// carries label `i`.
pub fn check_involution(fam: &DenseFamily, i: usize, m: usize) -> Result<FlipScan> {
    let total = exhaustive_range(fam)?;
    let mut defined = 0;
    for x in 0..total {
        if let Some(y) = flip_map(fam, i, m, x) {
            defined += 1;
            if flip_map(fam, i, m, y) != Some(x) {
                return Err(Error::CertificateInvalid(format!("f_{{{i},{m}}} is not an involution at {x:b}")));
            }
            let n = (x ^ y).trailing_zeros() as usize;
            if fam.e[n] != i {
                return Err(Error::CertificateInvalid(format!("flip at {n} has label {} not {i}", fam.e[n])));
            }
        }
    }
    Ok(FlipScan {
        i,
        m,
        strings: total,
        defined,
    })
}

/// Random-sample variant of [`check_involution`] for long strings.
pub fn check_involution_sampled(fam: &DenseFamily, i: usize, m: usize, samples: usize, seed: u64) -> Result<FlipScan> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut defined = 0;
    for _ in 0..samples {
        let x = rng.gen::<u64>() & mask(fam.l);
        if let Some(y) = flip_map(fam, i, m, x) {
            defined += 1;
            if flip_map(fam, i, m, y) != Some(x) {
                return Err(Error::CertificateInvalid(format!("f_{{{i},{m}}} is not an involution at {x:b}")));
            }
        }
    }
    Ok(FlipScan {
        i,
        m,
        strings: samples as u64,
        defined,
    })
}

/// If `f_{i,m}` flips position `n` at `x`, it flips `n` at every string
/// sharing the first `n` bits of `x`.
pub fn check_prefix_determination(fam: &DenseFamily, i: usize, m: usize) -> Result<FlipScan> {
    let total = exhaustive_range(fam)?;
    let pos: Vec<Option<usize>> = (0..total).map(|x| flip_position(fam, i, m, x)).collect();
    let mut seen = HashSet::new();
    for (x, p) in pos.iter().enumerate() {
        let Some(p) = *p else { continue };
        let prefix = x as u64 & mask(p);
        if !seen.insert((p, prefix)) {
            continue;
        }
        for z in 0..1u64 << (fam.l - p) {
            let other = prefix | (z << p);
            if pos[other as usize] != Some(p) {
                return Err(Error::CertificateInvalid(format!(
                    "f_{{{i},{m}}} flips {p} at {x:b} but not at {other:b}"
                )));
            }
        }
    }
    Ok(FlipScan {
        i,
        m,
        strings: total,
        defined: pos.iter().flatten().count() as u64,
    })
}

/// Number of directed edges of each label over all of `2^L`. Also checks
/// that every edge is returned from its other end.
pub fn check_labels(fam: &DenseFamily) -> Result<Vec<u64>> {
    let total = exhaustive_range(fam)?;
    let mut counts = vec![0u64; fam.d];
    for x in 0..total {
        for edge in g0_edges_at_depth(fam, x) {
            counts[edge.label] += 1;
            let back = g0_edges_at_depth(fam, edge.y);
            if !back.iter().any(|b| b.y == x && b.position == edge.position && b.label == edge.label) {
                return Err(Error::CertificateInvalid(format!("edge {x:b} -> {:b} is not symmetric", edge.y)));
            }
        }
    }
    if let Some(i) = counts.iter().position(|&c| c == 0) {
        return Err(Error::CertificateInvalid(format!("label {i} never occurs")));
    }
    Ok(counts)
}

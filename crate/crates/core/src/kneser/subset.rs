//! k-subsets of `{0..n-1}` (n <= 64) and their colexicographic ranks.
//!
//! The rank of `{c_0 < c_1 < ... < c_{k-1}}` is `sum_i C(c_i, i + 1)`, the
//! combinatorial number system. Colex order coincides with increasing order
//! of the membership bitmask, which is what the generators iterate.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

pub const MAX_GROUND_SET: usize = 64;

/// Binomial coefficient, `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Binomial coefficient in arbitrary precision.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[inline]
pub(crate) fn ground_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A k-element subset of `{0..n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    n: u8,
    mask: u64,
}

impl KSubset {
    pub fn from_members(n: usize, members: &[usize]) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::BadParams(format!("ground set {n} exceeds {MAX_GROUND_SET}")));
        }
        let mut mask = 0u64;
        for &m in members {
            if m >= n {
                return Err(Error::BadParams(format!("member {m} outside 0..{n}")));
            }
            if mask >> m & 1 == 1 {
                return Err(Error::BadParams(format!("repeated member {m}")));
            }
            mask |= 1 << m;
        }
        Ok(KSubset { n: n as u8, mask })
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_GROUND_SET || mask & !ground_mask(n) != 0 {
            return Err(Error::BadParams(format!("mask {mask:#x} outside ground set {n}")));
        }
        Ok(KSubset { n: n as u8, mask })
    }

    /// The subset of colex rank `rank` among k-subsets of `{0..n-1}`.
    pub fn unrank(n: usize, k: usize, rank: u128) -> Result<Self> {
        if n > MAX_GROUND_SET || k > n {
            return Err(Error::BadParams(format!("no {k}-subsets of {n}")));
        }
        let total = binomial(n as u64, k as u64).expect("n <= 64 fits in u128");
        if rank >= total {
            return Err(Error::BadParams(format!("rank {rank} >= C({n},{k}) = {total}")));
        }
        let mut rest = rank;
        let mut mask = 0u64;
        let mut top = n as u64;
        for i in (1..=k as u64).rev() {
            // largest c < top with C(c, i) <= rest
            let mut c = top - 1;
            while binomial(c, i).unwrap() > rest {
                c -= 1;
            }
            rest -= binomial(c, i).unwrap();
            mask |= 1 << c;
            top = c;
        }
        Ok(KSubset { n: n as u8, mask })
    }

    pub fn rank(&self) -> u128 {
        self.members()
            .iter()
            .enumerate()
            .map(|(i, &c)| binomial(c as u64, i as u64 + 1).unwrap())
            .sum()
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn k(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn members(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.k());
        let mut m = self.mask;
        while m != 0 {
            out.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        out
    }

    pub fn least(&self) -> Option<usize> {
        (self.mask != 0).then(|| self.mask.trailing_zeros() as usize)
    }

    pub fn is_disjoint(&self, other: &KSubset) -> bool {
        self.mask & other.mask == 0
    }

    /// No two members differ by 1 mod n.
    pub fn is_cyclically_stable(&self) -> bool {
        let n = self.n();
        if n < 2 {
            return true;
        }
        let rotated = ((self.mask << 1) | (self.mask >> (n - 1))) & ground_mask(n);
        self.mask & rotated == 0
    }

    /// Image under a permutation of the ground set.
    pub fn permute(&self, perm: &[usize]) -> KSubset {
        let mask = self.members().iter().fold(0u64, |acc, &m| acc | 1 << perm[m]);
        KSubset { n: self.n, mask }
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

/// Masks of all k-subsets of the bits in `universe`, in increasing order.
pub(crate) fn subsets_of(universe: u64, k: usize) -> impl Iterator<Item = u64> {
    let positions: Vec<u32> = (0..64).filter(|b| universe >> b & 1 == 1).collect();
    let m = positions.len();
    let mut idx: Option<Vec<usize>> = (k <= m).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let cur = idx.as_mut()?;
        let mask = cur.iter().fold(0u64, |acc, &i| acc | 1 << positions[i]);
        // advance to the next combination in colex order
        let mut j = 0;
        loop {
            if j == k {
                idx = None;
                break;
            }
            let limit = if j + 1 < k { cur[j + 1] } else { m };
            if cur[j] + 1 < limit {
                cur[j] += 1;
                for (t, slot) in cur.iter_mut().enumerate().take(j) {
                    *slot = t;
                }
                break;
            }
            j += 1;
        }
        Some(mask)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(5, 6), Some(0));
        assert_eq!(binomial(64, 32), Some(1_832_624_140_942_590_534));
        assert_eq!(binomial_big(100, 50).to_string(), "100891344545564193334812497256");
        assert_eq!(binomial(200, 100), None);
    }

    #[test]
    fn colex_order_matches_rank() {
        let all: Vec<u64> = subsets_of(ground_mask(7), 3).collect();
        assert_eq!(all.len(), 35);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (r, &m) in all.iter().enumerate() {
            let s = KSubset::from_mask(7, m).unwrap();
            assert_eq!(s.rank(), r as u128);
            assert_eq!(KSubset::unrank(7, 3, r as u128).unwrap(), s);
        }
    }

    #[test]
    fn subsets_edge_cases() {
        assert_eq!(subsets_of(0b1011, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of(0b1011, 4).count(), 0);
        assert_eq!(subsets_of(0b1011, 3).collect::<Vec<_>>(), vec![0b1011]);
        assert_eq!(subsets_of(u64::MAX, 1).count(), 64);
    }

    #[test]
    fn stability() {
        assert!(KSubset::from_members(5, &[0, 2]).unwrap().is_cyclically_stable());
        assert!(!KSubset::from_members(5, &[0, 4]).unwrap().is_cyclically_stable());
        assert!(!KSubset::from_members(5, &[1, 2]).unwrap().is_cyclically_stable());
        assert!(KSubset::from_members(64, &[0, 62]).unwrap().is_cyclically_stable());
        assert!(!KSubset::from_members(64, &[0, 63]).unwrap().is_cyclically_stable());
    }

    #[test]
    fn rejects_bad_members() {
        assert!(KSubset::from_members(4, &[4]).is_err());
        assert!(KSubset::from_members(4, &[1, 1]).is_err());
        assert!(KSubset::unrank(5, 2, 10).is_err());
    }

    proptest! {
        #[test]
        fn rank_unrank_roundtrip(n in 1usize..=64, kf in 0.0f64..1.0, seed in any::<u128>()) {
            let k = ((n as f64) * kf) as usize;
            let total = binomial(n as u64, k as u64).unwrap();
            let r = seed % total;
            let s = KSubset::unrank(n, k, r).unwrap();
            prop_assert_eq!(s.k(), k);
            prop_assert_eq!(s.rank(), r);
        }
    }
}

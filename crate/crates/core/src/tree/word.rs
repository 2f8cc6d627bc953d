use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element of the free product of `d` copies of `Z/2`, as a reduced word in
/// the generators `a_0..a_{d-1}`: no letter repeats immediately.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReducedWord {
    d: usize,
    letters: Vec<u8>,
}

fn check_letters(d: usize, letters: &[u8]) -> Result<()> {
    if !(2..=u8::MAX as usize).contains(&d) {
        return Err(Error::BadParams(format!("generator count {d} out of range")));
    }
    if let Some(&l) = letters.iter().find(|&&l| l as usize >= d) {
        return Err(Error::BadParams(format!("letter {l} not below d = {d}")));
    }
    Ok(())
}

/// Cancels adjacent equal letters until none remain. Stack-based, so the
/// result is the unique normal form.
pub fn reduce(d: usize, letters: &[u8]) -> Result<ReducedWord> {
    check_letters(d, letters)?;
    let mut out: Vec<u8> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Ok(ReducedWord { d, letters: out })
}

impl ReducedWord {
    pub fn identity(d: usize) -> Self {
        ReducedWord { d, letters: Vec::new() }
    }

    /// Accepts only words that are already reduced.
    pub fn new(d: usize, letters: Vec<u8>) -> Result<Self> {
        check_letters(d, &letters)?;
        if let Some(i) = letters.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::NotReduced(format!(
                "letters {i} and {} are both a_{}",
                i + 1,
                letters[i]
            )));
        }
        Ok(ReducedWord { d, letters })
    }

    /// Parses comma-separated generator indices, e.g. `2,0`; the empty
    /// string is the identity.
    pub fn parse(d: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::BadParams(format!("bad generator index {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        ReducedWord::new(d, letters)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn last(&self) -> Option<u8> {
        self.letters.last().copied()
    }

    pub fn inverse(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        ReducedWord { d: self.d, letters }
    }

    /// `self * other`, reduced.
    pub fn mul(&self, other: &ReducedWord) -> Self {
        debug_assert_eq!(self.d, other.d);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        reduce(self.d, &letters).expect("letters already checked")
    }

    /// `self * a_i`.
    pub fn times_generator(&self, i: u8) -> Self {
        let mut letters = self.letters.clone();
        if letters.last() == Some(&i) {
            letters.pop();
        } else {
            letters.push(i);
        }
        ReducedWord { d: self.d, letters }
    }

    /// The `j` rightmost letters.
    pub fn suffix(&self, j: usize) -> Self {
        ReducedWord {
            d: self.d,
            letters: self.letters[self.letters.len() - j..].to_vec(),
        }
    }

    /// The `j` leftmost letters.
    pub fn prefix(&self, j: usize) -> Self {
        ReducedWord {
            d: self.d,
            letters: self.letters[..j].to_vec(),
        }
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "a{l}")?;
        }
        Ok(())
    }
}

/// Word syntax without a known `d`: infers `d` as one more than the largest
/// letter, and at least 2.
impl FromStr for ReducedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let probe = ReducedWord::parse(u8::MAX as usize, s)?;
        let d = probe.letters.iter().map(|&l| l as usize + 1).max().unwrap_or(2).max(2);
        ReducedWord::new(d, probe.letters)
    }
}

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Permutation, Word};
use crate::error::{Error, Result};

/// The monotone-increasing string `s_lo s_{lo+1} ⋯ s_hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonotoneString {
    pub lo: usize,
    pub hi: usize,
}

impl MonotoneString {
    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(1 <= lo && lo <= hi);
        MonotoneString { lo, hi }
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl fmt::Display for MonotoneString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.letters() {
            write!(f, "s{a}")?;
        }
        Ok(())
    }
}

/// The unique factorization `w = w_{n-1} w_{n-2} ⋯ w_1` where each string
/// `w_i` is empty or `s_{k_i} s_{k_i+1} ⋯ s_i` with `1 ≤ k_i ≤ i`.
///
/// Stored as the string lengths `ℓ(w_1), …, ℓ(w_{n-1})`; lengths add up to
/// the length of the product.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonotoneFactorization {
    n: usize,
    lengths: Vec<usize>,
}

impl MonotoneFactorization {
    /// `lengths[i-1]` is `ℓ(w_i)` and must not exceed `i`.
    pub fn from_lengths(n: usize, lengths: Vec<usize>) -> Result<Self> {
        if lengths.len() != n.saturating_sub(1) {
            return Err(Error::RankMismatch { left: lengths.len() + 1, right: n });
        }
        for (idx, &len) in lengths.iter().enumerate() {
            if len > idx + 1 {
                return Err(Error::EllOutOfRange { index: idx + 1, value: len, bound: idx + 1 });
            }
        }
        Ok(MonotoneFactorization { n, lengths })
    }

    pub fn identity(n: usize) -> Self {
        MonotoneFactorization { n, lengths: vec![0; n.saturating_sub(1)] }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `ℓ(w_1), …, ℓ(w_{n-1})`.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// `ℓ(w_i)`.
    pub fn string_len(&self, i: usize) -> usize {
        self.lengths[i - 1]
    }

    /// The `i`-th string, `None` when it is the identity.
    pub fn string(&self, i: usize) -> Option<MonotoneString> {
        match self.lengths[i - 1] {
            0 => None,
            len => Some(MonotoneString::new(i + 1 - len, i)),
        }
    }

    pub fn total_length(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// The reduced word `w_{n-1} ⋯ w_1`.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.total_length());
        for i in (1..self.n).rev() {
            if let Some(s) = self.string(i) {
                letters.extend(s.letters());
            }
        }
        Word::new(letters)
    }

    pub fn to_permutation(&self) -> Permutation {
        self.to_word().evaluate(self.n).expect("string letters are below the rank")
    }
}

impl fmt::Display for MonotoneFactorization {
    /// Strings from `w_{n-1}` down to `w_1`, e.g. `(s3s4)(s3)(s2)(e)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (1..self.n).rev() {
            match self.string(i) {
                Some(s) => write!(f, "({s})")?,
                None => f.write_str("(e)")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MonotoneFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Peels strings from the top: `ℓ(w_i)` counts the entries left of position
/// `i+1` that exceed `w(i+1)`.
pub fn canonical_factorization(w: &Permutation) -> MonotoneFactorization {
    let images = w.images();
    let n = images.len();
    let lengths = (1..n)
        .map(|i| images[..i].iter().filter(|&&v| v > images[i]).count())
        .collect();
    MonotoneFactorization { n, lengths }
}

pub fn factorization_to_permutation(f: &MonotoneFactorization) -> Permutation {
    f.to_permutation()
}

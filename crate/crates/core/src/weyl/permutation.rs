use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of `S_n` in one-line notation `[w(1), …, w(n)]`.
///
/// Ordering is lexicographic on the one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    // 0-based images; ranks are capped at 255.
    images: Vec<u8>,
}

impl Permutation {
    pub const MAX_RANK: usize = u8::MAX as usize;

    pub fn identity(n: usize) -> Self {
        assert!(n <= Self::MAX_RANK, "rank {n} exceeds {}", Self::MAX_RANK);
        Permutation { images: (0..n as u8).collect() }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        if n > Self::MAX_RANK {
            return Err(Error::InvalidPermutation(format!("rank {n} exceeds {}", Self::MAX_RANK)));
        }
        let mut seen = vec![false; n];
        for &v in one_line {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{one_line:?} is not a bijection of 1..={n}"
                )));
            }
        }
        Ok(Permutation { images: one_line.iter().map(|&v| (v - 1) as u8).collect() })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub(crate) fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.rank()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(Permutation { images: other.images.iter().map(|&v| self.images[v as usize]).collect() })
    }

    /// In-place `w ← w · s_i`: swap positions `i` and `i+1`.
    pub(crate) fn mul_simple_right(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    /// Bruhat lower covers `w · (a b)` of length `ℓ(w) − 1`.
    pub fn lower_covers(&self) -> Vec<Permutation> {
        let w = &self.images;
        let n = w.len();
        let mut covers = Vec::new();
        for a in 0..n {
            // Scan right of `a`, keeping the largest value below w[a] seen so far;
            // `b` is a cover exactly when w[b] exceeds it.
            let mut floor: Option<u8> = None;
            for b in a + 1..n {
                if w[b] < w[a] && floor.is_none_or(|f| w[b] > f) {
                    let mut images = w.clone();
                    images.swap(a, b);
                    covers.push(Permutation { images });
                    floor = Some(w[b]);
                }
            }
        }
        covers
    }
}

pub fn length(w: &Permutation) -> usize {
    w.length()
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses `"[3,5,2,4,1]"`; brackets are optional.
    fn from_str(text: &str) -> Result<Self> {
        let body = text.trim().trim_start_matches('[').trim_end_matches(']');
        let values = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad one-line entry {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(&values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(perm("[4,3,2,1]").length(), 6);
        // Pairs (3,2) (3,1) (5,2) (5,4) (5,1) (2,1) (4,1).
        assert_eq!(perm("[3,5,2,4,1]").length(), 7);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!("[1,1,2]".parse::<Permutation>().is_err());
        assert!("[0,1]".parse::<Permutation>().is_err());
        assert!("[1,3]".parse::<Permutation>().is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let w = perm("[3,5,2,4,1]");
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
        assert_eq!(w.inverse(), perm("[5,3,1,4,2]"));
        assert!(w.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn covers_drop_length_by_one() {
        let w = perm("[4,2,5,1,3]");
        let covers = w.lower_covers();
        assert!(!covers.is_empty());
        assert!(covers.iter().all(|v| v.length() + 1 == w.length()));
        assert_eq!(Permutation::identity(4).lower_covers(), vec![]);
        // s_1 s_2 s_1 in S_3 covers both s_1 s_2 and s_2 s_1.
        assert_eq!(perm("[3,2,1]").lower_covers().len(), 2);
    }

    #[test]
    fn serde_is_one_line() {
        let w = perm("[2,1,3]");
        assert_eq!(serde_json::to_string(&w).unwrap(), "[2,1,3]");
    }
}

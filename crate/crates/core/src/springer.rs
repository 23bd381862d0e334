//! Permutation flags in the Springer fiber of a nilpotent of Jordan type `λ`.
//!
//! The nilpotent is read off the base filling of `λ`. A permutation `w` gives
//! a flag in the fiber exactly when labeling the box with base label `i` by
//! `w⁻¹(i)` is row-strict, and the affine cell through that flag has
//! dimension equal to the number of dimension pairs of the resulting tableau.
//! Only those dimensions are computed; the fiber itself is never built.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{base_filling, enumerate_row_strict, Partition, RowStrictTableau};
use crate::weyl::{MonotoneFactorization, Permutation, PoincarePolynomial};

/// Nonzero entries of the nilpotent `X` with `X_{kj} = 1` when `j` sits
/// directly right of `k` in the base filling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentMatrix {
    pub n: usize,
    /// Sparse `(k, j)` pairs, sorted.
    pub ones: Vec<(usize, usize)>,
}

impl NilpotentMatrix {
    pub fn entry(&self, k: usize, j: usize) -> u8 {
        u8::from(self.ones.binary_search(&(k, j)).is_ok())
    }
}

pub fn nilpotent_matrix(shape: &Partition) -> NilpotentMatrix {
    let base = base_filling(shape);
    let mut ones: Vec<(usize, usize)> = base
        .rows()
        .iter()
        .flat_map(|row| row.windows(2).map(|w| (w[0], w[1])))
        .collect();
    ones.sort_unstable();
    NilpotentMatrix { n: shape.size(), ones }
}

/// A pair `p < q` counted by the cell dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimensionPair {
    pub p: usize,
    pub q: usize,
}

/// `ℓ_1, …, ℓ_{n-1}` where `ℓ_{q-1}` counts the dimension pairs `(p, q)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct EllVector {
    values: Vec<usize>,
}

impl EllVector {
    /// Checks `ℓ_i ≤ i`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        for (idx, &v) in values.iter().enumerate() {
            if v > idx + 1 {
                return Err(Error::EllOutOfRange { index: idx + 1, value: v, bound: idx + 1 });
            }
        }
        Ok(EllVector { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `ℓ_i` for `1 ≤ i ≤ n-1`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn rank(&self) -> usize {
        self.values.len() + 1
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    /// Reads `ℓ_i` as the length of the `i`-th string.
    pub fn to_factorization(&self) -> MonotoneFactorization {
        MonotoneFactorization::from_lengths(self.rank(), self.values.clone())
            .expect("ℓ_i ≤ i is checked on construction")
    }
}

impl From<&MonotoneFactorization> for EllVector {
    fn from(f: &MonotoneFactorization) -> Self {
        EllVector { values: f.lengths().to_vec() }
    }
}

impl TryFrom<Vec<usize>> for EllVector {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        EllVector::new(values)
    }
}

impl From<EllVector> for Vec<usize> {
    fn from(e: EllVector) -> Self {
        e.values
    }
}

impl fmt::Display for EllVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for EllVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The `w` with `w⁻¹(i)` equal to the entry of `tableau` in the box whose
/// base label is `i`.
pub fn springer_permutation(tableau: &RowStrictTableau) -> Permutation {
    let base = base_filling(tableau.shape());
    let mut one_line = vec![0; tableau.size()];
    for (label_row, entry_row) in base.rows().iter().zip(tableau.rows()) {
        for (&label, &entry) in label_row.iter().zip(entry_row) {
            one_line[entry - 1] = label;
        }
    }
    Permutation::from_one_line(&one_line).expect("tableau entries are a bijection")
}

/// The filling of `shape` by `w⁻¹`, when it is row-strict.
pub fn tableau_from_springer_permutation(
    w: &Permutation,
    shape: &Partition,
) -> Result<Option<RowStrictTableau>> {
    if w.rank() != shape.size() {
        return Err(Error::RankMismatch { left: w.rank(), right: shape.size() });
    }
    let inverse = w.inverse();
    let rows: Vec<Vec<usize>> = base_filling(shape)
        .rows()
        .iter()
        .map(|row| row.iter().map(|&label| inverse.image(label)).collect())
        .collect();
    Ok(RowStrictTableau::from_rows(rows).ok())
}

/// Pairs `p < q` with `q` either below `p` in the same column or anywhere in
/// a column strictly left of `p`, and `q` less than the entry right of `p`
/// when there is one.
#[allow(clippy::needless_range_loop)]
pub fn dimension_pairs(tableau: &RowStrictTableau) -> Vec<DimensionPair> {
    let pos = tableau.positions();
    let n = tableau.size();
    let mut pairs = Vec::new();
    for p in 1..=n {
        let (row_p, col_p) = pos[p];
        let right = tableau.entry(row_p, col_p + 1);
        for q in p + 1..=n {
            let (row_q, col_q) = pos[q];
            if ((col_q == col_p && row_q > row_p) || col_q < col_p) && right.is_none_or(|r| q < r) {
                pairs.push(DimensionPair { p, q });
            }
        }
    }
    pairs
}

/// Cell dimension of `tableau`: the number of dimension pairs.
pub fn cell_dimension(tableau: &RowStrictTableau) -> usize {
    dimension_pairs(tableau).len()
}

/// ℓ-vector by row counting in the truncations `T[q]`: rows above `q`'s row
/// with the same length, plus rows that are strictly longer.
#[allow(clippy::needless_range_loop)]
pub fn ell_vector(tableau: &RowStrictTableau) -> EllVector {
    let pos = tableau.positions();
    let n = tableau.size();
    let mut lengths = vec![0usize; tableau.shape().num_rows()];
    let mut values = Vec::with_capacity(n.saturating_sub(1));
    for q in 1..=n {
        let row = pos[q].0 - 1;
        lengths[row] += 1;
        if q == 1 {
            continue;
        }
        let own = lengths[row];
        let above = lengths[..row].iter().filter(|&&len| len == own).count();
        let longer = lengths.iter().filter(|&&len| len > own).count();
        values.push(above + longer);
    }
    EllVector { values }
}

/// `Σ_T t^{dim T}` over the row-strict tableaux of `shape`.
pub fn springer_poincare(shape: &Partition) -> PoincarePolynomial {
    let tableaux = enumerate_row_strict(shape);
    let degrees: Vec<usize> = tableaux.par_iter().map(cell_dimension).collect();
    PoincarePolynomial::from_degrees(degrees)
}

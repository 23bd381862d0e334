//! Schubert points: the permutation `w_T = w_{n-1} ⋯ w_1` whose `(q-1)`-th
//! string has length `ℓ_{q-1}(T)`, so that `ℓ(w_T)` is the cell dimension of `T`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{enumerate_row_strict, Partition, RowStrictTableau};
use crate::springer::{ell_vector, EllVector};
use crate::weyl::{canonical_factorization, MonotoneFactorization, Permutation};

/// `∏_{i=2}^{n} x_i^{e_i}`, stored as the exponents of `x_2, …, x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<usize>,
}

impl Monomial {
    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// Exponent of `x_i`; always zero for `x_1`.
    pub fn exponent(&self, i: usize) -> usize {
        match i {
            0 | 1 => 0,
            i => self.exponents.get(i - 2).copied().unwrap_or(0),
        }
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Monomial {
    /// Highest variable first, e.g. `x_5^2x_4x_3`; `1` when constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        for (idx, &e) in self.exponents.iter().enumerate().rev() {
            match e {
                0 => {}
                1 => write!(f, "x_{}", idx + 2)?,
                e => write!(f, "x_{}^{e}", idx + 2)?,
            }
        }
        Ok(())
    }
}

/// The product of strings `w_{q-1} = s_{q-ℓ_{q-1}} ⋯ s_{q-1}`.
pub fn schubert_point_from_ell(ell: &EllVector, n: usize) -> Result<Permutation> {
    if ell.rank() != n {
        return Err(Error::RankMismatch { left: ell.rank(), right: n });
    }
    Ok(ell.to_factorization().to_permutation())
}

/// The factorization of `w_T` into strings.
pub fn schubert_factorization(tableau: &RowStrictTableau) -> MonotoneFactorization {
    ell_vector(tableau).to_factorization()
}

pub fn schubert_point(tableau: &RowStrictTableau) -> Permutation {
    schubert_factorization(tableau).to_permutation()
}

/// For a standard tableau, `i` in row `k` contributes the string
/// `s_{i-k+1} ⋯ s_{i-1}`.
pub fn standard_shortcut(tableau: &RowStrictTableau) -> Result<Permutation> {
    if !tableau.is_standard() {
        return Err(Error::NotStandard(tableau.to_string()));
    }
    let pos = tableau.positions();
    let lengths = (2..=tableau.size()).map(|i| pos[i].0 - 1).collect();
    Ok(MonotoneFactorization::from_lengths(tableau.size(), lengths)?.to_permutation())
}

/// The exponent of `x_i` is `ℓ_{i-1}`.
pub fn monomial(tableau: &RowStrictTableau) -> Monomial {
    Monomial { exponents: ell_vector(tableau).values().to_vec() }
}

/// Every Schubert point of a shape together with its tableau.
///
/// Lookups go through an index from ℓ-vectors to tableaux, built by
/// enumerating all row-strict tableaux.
#[derive(Clone, Debug)]
pub struct SchubertPoints {
    shape: Partition,
    tableaux: Vec<RowStrictTableau>,
    points: Vec<Permutation>,
    by_ell: HashMap<EllVector, usize>,
    collisions: usize,
}

impl SchubertPoints {
    pub fn new(shape: &Partition) -> Self {
        let tableaux = enumerate_row_strict(shape);
        let ells: Vec<EllVector> = tableaux.par_iter().map(ell_vector).collect();
        let points: Vec<Permutation> =
            ells.par_iter().map(|e| e.to_factorization().to_permutation()).collect();
        let mut by_ell = HashMap::with_capacity(ells.len());
        let mut collisions = 0;
        for (idx, ell) in ells.into_iter().enumerate() {
            if by_ell.insert(ell, idx).is_some() {
                collisions += 1;
            }
        }
        SchubertPoints { shape: shape.clone(), tableaux, points, by_ell, collisions }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of row-strict tableaux enumerated.
    pub fn tableau_count(&self) -> usize {
        self.tableaux.len()
    }

    /// Number of distinct points.
    pub fn len(&self) -> usize {
        self.by_ell.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_ell.is_empty()
    }

    /// Whether no two tableaux share a point.
    pub fn is_injective(&self) -> bool {
        self.collisions == 0
    }

    /// The tableau whose point is `w`, if any.
    pub fn lookup(&self, w: &Permutation) -> Option<&RowStrictTableau> {
        if w.rank() != self.shape.size() {
            return None;
        }
        let ell = EllVector::from(&canonical_factorization(w));
        self.by_ell.get(&ell).map(|&idx| &self.tableaux[idx])
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.lookup(w).is_some()
    }

    /// `(tableau, point)` pairs in tableau enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = (&RowStrictTableau, &Permutation)> {
        self.tableaux.iter().zip(&self.points)
    }

    pub fn points(&self) -> &[Permutation] {
        &self.points
    }

    /// Points of the standard tableaux, in tableau enumeration order.
    pub fn standard_points(&self) -> Vec<Permutation> {
        self.iter().filter(|(t, _)| t.is_standard()).map(|(_, w)| w.clone()).collect()
    }

    pub fn to_map(&self) -> BTreeMap<Permutation, RowStrictTableau> {
        self.iter().map(|(t, w)| (w.clone(), t.clone())).collect()
    }
}

/// Map from each Schubert point of `shape` to its tableau.
pub fn schubert_point_set(shape: &Partition) -> BTreeMap<Permutation, RowStrictTableau> {
    SchubertPoints::new(shape).to_map()
}

/// The tableau of shape `shape` whose Schubert point is `w`, if one exists.
pub fn is_schubert_point(w: &Permutation, shape: &Partition) -> Result<Option<RowStrictTableau>> {
    if w.rank() != shape.size() {
        return Err(Error::RankMismatch { left: w.rank(), right: shape.size() });
    }
    Ok(SchubertPoints::new(shape).lookup(w).cloned())
}

/// One record of the serialized point set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub permutation: Permutation,
    pub tableau: RowStrictTableau,
}

/// Point-set records sorted lexicographically by one-line notation.
pub fn point_records(shape: &Partition) -> Vec<PointRecord> {
    schubert_point_set(shape)
        .into_iter()
        .map(|(permutation, tableau)| PointRecord { permutation, tableau })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Word;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(s: &str) -> RowStrictTableau {
        s.parse().unwrap()
    }

    fn eval(word: &str, n: usize) -> Permutation {
        word.parse::<Word>().unwrap().evaluate(n).unwrap()
    }

    #[test]
    fn from_ell() {
        let ell = |v: Vec<usize>| EllVector::new(v).unwrap();
        assert_eq!(schubert_point_from_ell(&ell(vec![0, 1, 1, 2]), 5).unwrap(), eval("3 4 3 2", 5));
        assert!(schubert_point_from_ell(&ell(vec![0, 0, 0]), 4).unwrap().is_identity());
        assert_eq!(schubert_point_from_ell(&ell(vec![1, 0, 2, 1]), 5).unwrap(), eval("4 2 3 1", 5));
        assert!(schubert_point_from_ell(&ell(vec![0, 0]), 5).is_err());
        assert!(EllVector::new(vec![2]).is_err());
    }

    #[test]
    fn example_points() {
        assert_eq!(schubert_point(&t("2,4/1,3/5")), eval("3 4", 5));
        assert!(schubert_point(&t("3,5/2,4/1")).is_identity());
        assert_eq!(schubert_point(&t("1,3/2,5/4")), eval("4 2 3 1", 5));
    }

    #[test]
    fn shortcut() {
        assert_eq!(standard_shortcut(&t("1,4/2,5/3")).unwrap(), eval("4 1 2 1", 5));
        assert!(standard_shortcut(&t("1,2,3,4")).unwrap().is_identity());
        assert_eq!(standard_shortcut(&t("1,2/3,4/5")).unwrap(), schubert_point(&t("1,2/3,4/5")));
        assert!(matches!(standard_shortcut(&t("2,3/1,4/5")), Err(Error::NotStandard(_))));
    }

    #[test]
    fn monomials() {
        assert_eq!(monomial(&t("1,2/3,4/5")).to_string(), "x_5^2x_4x_3");
        assert_eq!(monomial(&t("1,3/2,5/4")).to_string(), "x_5x_4^2x_2");
        let constant = monomial(&t("3,5/2,4/1"));
        assert_eq!(constant.to_string(), "1");
        assert_eq!(constant.exponents(), &[0, 0, 0, 0]);
        assert_eq!(monomial(&t("1,2/3,4/5")).exponent(5), 2);
    }

    #[test]
    fn point_sets() {
        let set = SchubertPoints::new(&p("2,2,1"));
        assert_eq!(set.len(), 30);
        assert!(set.is_injective());
        let single_row = schubert_point_set(&p("4"));
        assert_eq!(single_row.len(), 1);
        assert!(single_row.keys().next().unwrap().is_identity());
        assert_eq!(schubert_point_set(&p("1,1,1")).len(), 6);
    }

    #[test]
    fn inverse_lookup() {
        let w = eval("5 2 3 2 1", 6);
        assert_eq!(is_schubert_point(&w, &p("3,1,1,1")).unwrap(), None);
        for shape in ["3,2", "2,2,1", "1,1,1,1,1"] {
            assert!(is_schubert_point(&Permutation::identity(5), &p(shape)).unwrap().is_some());
        }
        assert_eq!(is_schubert_point(&eval("3 4 3 2", 5), &p("2,2,1")).unwrap(), Some(t("1,2/3,4/5")));
        assert!(is_schubert_point(&Permutation::identity(4), &p("2,2,1")).is_err());
    }

    #[test]
    fn records_are_sorted() {
        let records = point_records(&p("2,1"));
        assert!(records.windows(2).all(|w| w[0].permutation < w[1].permutation));
        let json = serde_json::to_string(&records[0]).unwrap();
        assert_eq!(json, r#"{"permutation":[1,2,3],"tableau":{"shape":[2,1],"rows":[[2,3],[1]]}}"#);
    }
}

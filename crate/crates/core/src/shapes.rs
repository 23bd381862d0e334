//! Partitions, compositions and fillings of Young diagrams.
//!
//! Boxes are addressed as `(row, column)`, both 1-indexed, row 1 on top.
//! Tableaux use the text form `"1,2/3,4/5"`: rows separated by `/`, entries
//! by `,`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition `λ = (λ_1 ≥ λ_2 ≥ … ≥ λ_k > 0)` of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if let Some(pos) = rows.iter().position(|&r| r == 0) {
            return Err(Error::InvalidPartition(format!("part {} is zero", pos + 1)));
        }
        if let Some(w) = rows.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, found {} < {} at part {}",
                rows[w],
                rows[w + 1],
                w + 1
            )));
        }
        Ok(Partition { rows })
    }

    /// The single-row partition `(n)`.
    pub fn row(n: usize) -> Result<Self> {
        Partition::new(vec![n])
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Result<Self> {
        Partition::new(vec![1; n])
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.rows[0]
    }

    /// Column lengths, left to right.
    pub fn conjugate(&self) -> Partition {
        let cols = (1..=self.num_columns())
            .map(|c| self.rows.iter().take_while(|&&r| r >= c).count())
            .collect();
        Partition { rows: cols }
    }

    /// Boxes in row-reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// Number of row-strict fillings, `n! / ∏ λ_i!`.
    pub fn row_strict_count(&self) -> u64 {
        // Product of binomials avoids overflowing the factorials.
        let mut remaining = self.size() as u64;
        let mut count = 1u64;
        for &r in &self.rows {
            count *= binomial(remaining, r as u64);
            remaining -= r as u64;
        }
        count
    }

    /// `μ ≤ λ` in dominance order, with `self` as μ.
    pub fn dominated_by(&self, lambda: &Partition) -> Result<bool> {
        dominance_leq(self, lambda)
    }

    /// All partitions of `n` in reverse lexicographic order: `(n)`, `(n-1,1)`, …, `(1^n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { rows: prefix.clone() });
                return;
            }
            for part in (1..=max.min(remaining)).rev() {
                prefix.push(part);
                go(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.rows
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2"`, `"(2,2,1)"` or `"2 2 1"`.
    fn from_str(text: &str) -> Result<Self> {
        let body = text.trim().trim_start_matches('(').trim_end_matches(')');
        let rows = parse_int_list(body)?;
        if rows.is_empty() {
            return Err(Error::Parse("empty partition".into()));
        }
        Partition::new(rows)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.rows, ",")
    }
}

fn parse_int_list(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected a nonnegative integer, found {s:?}")))
        })
        .collect()
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[usize], sep: &str) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// `μ ≤ λ` in dominance order: every prefix sum of `λ` is at least that of `μ`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch { left: mu.size(), right: lambda.size() });
    }
    let len = mu.num_rows().max(lambda.num_rows());
    let (mut sum_mu, mut sum_lambda) = (0, 0);
    for i in 0..len {
        sum_mu += mu.rows.get(i).copied().unwrap_or(0);
        sum_lambda += lambda.rows.get(i).copied().unwrap_or(0);
        if sum_mu > sum_lambda {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Row lengths of a truncated tableau; empty rows keep their position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    rows: Vec<usize>,
}

impl Composition {
    pub fn new(rows: Vec<usize>) -> Self {
        Composition { rows }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Parts sorted decreasingly with zeros dropped.
    pub fn sorted_shape(&self) -> Result<Partition> {
        let mut rows: Vec<usize> = self.rows.iter().copied().filter(|&r| r > 0).collect();
        if rows.is_empty() {
            return Err(Error::InvalidPartition("composition has no boxes".into()));
        }
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(rows)
    }
}

/// A bijective filling of a Young diagram by `1..=n` with strictly increasing rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRecord", into = "TableauRecord")]
pub struct RowStrictTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

/// Canonical serialized form of a tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauRecord {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<usize>>,
}

impl RowStrictTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(format!("row lengths do not form a partition ({e})")))?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for &v in row {
                if v == 0 || v > n {
                    return Err(Error::InvalidTableau(format!("entry {v} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidTableau(format!("entry {v} repeated")));
                }
            }
            if let Some(c) = row.windows(2).position(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} is not strictly increasing at column {}",
                    r + 1,
                    c + 1
                )));
            }
        }
        Ok(RowStrictTableau { shape, rows })
    }

    /// Parses the text form and checks that its shape is `shape`.
    pub fn parse_with_shape(text: &str, shape: &Partition) -> Result<Self> {
        let t: RowStrictTableau = text.parse()?;
        if &t.shape != shape {
            return Err(Error::InvalidTableau(format!(
                "tableau has shape ({}) but ({shape}) was expected",
                t.shape
            )));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry in box `(row, col)` (1-indexed), if the box exists.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// `positions()[v]` is the 1-indexed box holding `v`; index 0 is unused.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                pos[v] = (r + 1, c + 1);
            }
        }
        pos
    }

    /// Row-reading word: row 1 left to right, then row 2, …
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        self.rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| below > above))
    }

    /// `T[i]`: delete the boxes labeled `i+1, …, n`.
    pub fn truncate(&self, i: usize) -> PartialTableau {
        PartialTableau {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().copied().take_while(|&v| v <= i).collect())
                .collect(),
        }
    }

    /// Sort every column increasingly from top to bottom.
    pub fn standardize(&self) -> StandardTableau {
        let mut rows = self.rows.clone();
        for col in 0..self.shape.num_columns() {
            let height = rows.iter().take_while(|row| row.len() > col).count();
            let mut column: Vec<usize> = rows[..height].iter().map(|row| row[col]).collect();
            column.sort_unstable();
            for (row, v) in rows[..height].iter_mut().zip(column) {
                row[col] = v;
            }
        }
        StandardTableau(
            RowStrictTableau::from_rows(rows)
                .expect("column sorting of a row-strict tableau is row-strict"),
        )
    }

    pub fn to_record(&self) -> TableauRecord {
        TableauRecord { shape: self.shape.rows().to_vec(), rows: self.rows.clone() }
    }
}

impl TryFrom<TableauRecord> for RowStrictTableau {
    type Error = Error;

    fn try_from(rec: TableauRecord) -> Result<Self> {
        let t = RowStrictTableau::from_rows(rec.rows)?;
        if t.shape.rows() != rec.shape.as_slice() {
            return Err(Error::InvalidTableau("shape field disagrees with rows".into()));
        }
        Ok(t)
    }
}

impl From<RowStrictTableau> for TableauRecord {
    fn from(t: RowStrictTableau) -> Self {
        t.to_record()
    }
}

impl FromStr for RowStrictTableau {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let rows = text
            .trim()
            .split('/')
            .map(parse_int_list)
            .collect::<Result<Vec<_>>>()?;
        RowStrictTableau::from_rows(rows)
    }
}

impl fmt::Display for RowStrictTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write_joined(f, row, ",")?;
        }
        Ok(())
    }
}

/// A row-strict tableau whose columns also increase from top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RowStrictTableau", into = "RowStrictTableau")]
pub struct StandardTableau(RowStrictTableau);

impl StandardTableau {
    pub fn as_row_strict(&self) -> &RowStrictTableau {
        &self.0
    }

    pub fn into_row_strict(self) -> RowStrictTableau {
        self.0
    }
}

impl std::ops::Deref for StandardTableau {
    type Target = RowStrictTableau;

    fn deref(&self) -> &RowStrictTableau {
        &self.0
    }
}

impl TryFrom<RowStrictTableau> for StandardTableau {
    type Error = Error;

    fn try_from(t: RowStrictTableau) -> Result<Self> {
        if t.is_standard() {
            Ok(StandardTableau(t))
        } else {
            Err(Error::NotStandard(t.to_string()))
        }
    }
}

impl From<StandardTableau> for RowStrictTableau {
    fn from(t: StandardTableau) -> Self {
        t.0
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        StandardTableau::try_from(text.parse::<RowStrictTableau>()?)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The tableau `T[i]`: rows keep their positions, possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialTableau {
    rows: Vec<Vec<usize>>,
}

impl PartialTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn composition(&self) -> Composition {
        Composition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn truncate(&self, j: usize) -> PartialTableau {
        PartialTableau {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().copied().take_while(|&v| v <= j).collect())
                .collect(),
        }
    }
}

impl fmt::Display for PartialTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write_joined(f, row, ",")?;
        }
        Ok(())
    }
}

/// The base filling: labels run up each column from the bottom, columns left
/// to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseFilling {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl BaseFilling {
    pub fn new(shape: &Partition) -> Self {
        let mut rows: Vec<Vec<usize>> = shape.rows().iter().map(|&len| vec![0; len]).collect();
        let mut label = 1;
        for (c, &height) in shape.conjugate().rows().iter().enumerate() {
            for r in (0..height).rev() {
                rows[r][c] = label;
                label += 1;
            }
        }
        BaseFilling { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn label(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// The base filling read as a tableau; it is always row-strict.
    pub fn as_tableau(&self) -> RowStrictTableau {
        RowStrictTableau::from_rows(self.rows.clone()).expect("base filling is row-strict")
    }
}

pub fn base_filling(shape: &Partition) -> BaseFilling {
    BaseFilling::new(shape)
}

/// All row-strict tableaux of `shape`, ordered lexicographically by reading word.
pub fn enumerate_row_strict(shape: &Partition) -> Vec<RowStrictTableau> {
    let mut out = Vec::with_capacity(shape.row_strict_count() as usize);
    fill_rows(shape, false, &mut |rows| {
        out.push(RowStrictTableau { shape: shape.clone(), rows: rows.to_vec() })
    });
    out
}

/// All standard tableaux of `shape`, ordered lexicographically by reading word.
pub fn enumerate_standard(shape: &Partition) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    fill_rows(shape, true, &mut |rows| {
        out.push(StandardTableau(RowStrictTableau { shape: shape.clone(), rows: rows.to_vec() }))
    });
    out
}

/// Row by row, choose each row's entry set from the unused values in
/// lexicographic order of increasing tuples. With `columns_increase`, rows
/// must sit strictly above-to-below increasing in every column.
fn fill_rows(shape: &Partition, columns_increase: bool, emit: &mut dyn FnMut(&[Vec<usize>])) {
    let n = shape.size();
    let mut used = vec![false; n + 1];
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(shape.num_rows());
    fill_row(shape.rows(), columns_increase, &mut used, &mut rows, emit);
}

fn fill_row(
    lengths: &[usize],
    columns_increase: bool,
    used: &mut [bool],
    rows: &mut Vec<Vec<usize>>,
    emit: &mut dyn FnMut(&[Vec<usize>]),
) {
    let r = rows.len();
    if r == lengths.len() {
        emit(rows);
        return;
    }
    let free: Vec<usize> = (1..used.len()).filter(|&v| !used[v]).collect();
    let len = lengths[r];
    let mut current = Vec::with_capacity(len);
    choose(&free, 0, len, &mut current, &mut |chosen| {
        if columns_increase && r > 0 && chosen.iter().zip(&rows[r - 1]).any(|(b, a)| b <= a) {
            return;
        }
        for &v in chosen {
            used[v] = true;
        }
        rows.push(chosen.to_vec());
        fill_row(lengths, columns_increase, used, rows, emit);
        rows.pop();
        for &v in chosen {
            used[v] = false;
        }
    });
}

fn choose(
    pool: &[usize],
    start: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        visit(current);
        return;
    }
    for idx in start..=pool.len().saturating_sub(remaining) {
        if pool.len() < remaining {
            break;
        }
        current.push(pool[idx]);
        choose(pool, idx + 1, remaining - 1, current, visit);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(s: &str) -> RowStrictTableau {
        s.parse().unwrap()
    }

    #[test]
    fn parse_partitions() {
        assert_eq!(p("3,2").rows(), &[3, 2]);
        assert_eq!(p("2,2,1").rows(), &[2, 2, 1]);
        assert_eq!(p("(2,2,1)").rows(), &[2, 2, 1]);
        assert!(matches!("2,3".parse::<Partition>(), Err(Error::InvalidPartition(_))));
        assert!(matches!("2,0".parse::<Partition>(), Err(Error::InvalidPartition(_))));
        assert!(matches!("".parse::<Partition>(), Err(Error::Parse(_))));
        assert!(matches!("2,-1".parse::<Partition>(), Err(Error::Parse(_))));
        assert!(matches!("a".parse::<Partition>(), Err(Error::Parse(_))));
    }

    #[test]
    fn base_fillings() {
        assert_eq!(base_filling(&p("3,2")).rows(), &[vec![2, 4, 5], vec![1, 3]]);
        assert_eq!(base_filling(&p("1")).rows(), &[vec![1]]);
        assert_eq!(base_filling(&p("2,2,1")).rows(), &[vec![3, 5], vec![2, 4], vec![1]]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_row_strict(&p("2,2,1")).len(), 30);
        assert_eq!(enumerate_row_strict(&p("4")), vec![t("1,2,3,4")]);
        assert_eq!(enumerate_row_strict(&p("1,1,1")).len(), 6);
        assert_eq!(enumerate_standard(&p("1,1")).len(), 1);
        assert_eq!(enumerate_standard(&p("2,2")).len(), 2);
    }

    #[test]
    fn standard_tableaux_of_221() {
        let got: Vec<String> =
            enumerate_standard(&p("2,2,1")).iter().map(ToString::to_string).collect();
        assert_eq!(got, ["1,2/3,4/5", "1,2/3,5/4", "1,3/2,4/5", "1,3/2,5/4", "1,4/2,5/3"]);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = enumerate_row_strict(&p("3,2,1"));
        assert!(all.windows(2).all(|w| w[0].reading_word() < w[1].reading_word()));
    }

    #[test]
    fn truncation() {
        let tab = t("1,2/3,4/5");
        let t3 = tab.truncate(3);
        assert_eq!(t3.rows(), &[vec![1, 2], vec![3], vec![]]);
        assert_eq!(t3.composition().rows(), &[2, 1, 0]);
        assert_eq!(tab.truncate(5).rows(), tab.rows());
    }

    #[test]
    fn sorted_shapes() {
        let sorted = |v: Vec<usize>| Composition::new(v).sorted_shape().unwrap();
        assert_eq!(sorted(vec![2, 1, 0]), p("2,1"));
        assert_eq!(sorted(vec![1, 2]), p("2,1"));
        assert_eq!(sorted(vec![2, 2, 3]), p("3,2,2"));
        assert!(Composition::new(vec![0, 0]).sorted_shape().is_err());
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&p("2,2,1"), &p("3,2")).unwrap());
        assert!(!dominance_leq(&p("3,2"), &p("2,2,1")).unwrap());
        assert!(dominance_leq(&p("3,2"), &p("3,2")).unwrap());
        assert!(!dominance_leq(&p("2,2,2"), &p("3,1,1,1")).unwrap());
        assert!(!dominance_leq(&p("3,1,1,1"), &p("2,2,2")).unwrap());
        assert_eq!(
            dominance_leq(&p("2,1"), &p("2,2")),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn standardization() {
        assert_eq!(t("2,3/1,4/5").standardize().to_string(), "1,3/2,4/5");
        assert_eq!(t("3,4/1,2/5").standardize().to_string(), "1,2/3,4/5");
        let standard = t("1,3/2,5/4");
        assert_eq!(standard.standardize().as_row_strict(), &standard);
    }

    #[test]
    fn tableau_validation() {
        assert!("2,1/3".parse::<RowStrictTableau>().is_err());
        assert!("1/2,3".parse::<RowStrictTableau>().is_err());
        assert!("1,2/2".parse::<RowStrictTableau>().is_err());
        assert!("1,4/2".parse::<RowStrictTableau>().is_err());
        assert!("1,3/2,4".parse::<StandardTableau>().is_ok());
        assert!("2,3/1,4".parse::<StandardTableau>().is_err());
        assert!(RowStrictTableau::parse_with_shape("1,2/3", &p("2,2")).is_err());
    }

    #[test]
    fn serde_shape() {
        let tab = t("1,2/3,4/5");
        let json = serde_json::to_string(&tab).unwrap();
        assert_eq!(json, r#"{"shape":[2,2,1],"rows":[[1,2],[3,4],[5]]}"#);
        let back: RowStrictTableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, tab);
        assert!(serde_json::from_str::<RowStrictTableau>(r#"{"shape":[2,2],"rows":[[1,2],[3,4],[5]]}"#)
            .is_err());
    }

    #[test]
    fn partitions_in_reverse_lex() {
        let all: Vec<String> = Partition::all(4).iter().map(ToString::to_string).collect();
        assert_eq!(all, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(Partition::all(8).len(), 22);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,2").conjugate(), p("2,2,1"));
        assert_eq!(p("1,1,1").conjugate(), p("3"));
    }
}

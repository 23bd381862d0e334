//! Erasing one simple reflection from a monotone factorization and restoring
//! monotone form.
//!
//! Erasing the letter `s_d` from `w_j = s_a ⋯ s_j` leaves the suffix
//! `s_{d+1} ⋯ s_j` as the new `j`-th string and the prefix `s_a ⋯ s_{d-1}` as
//! a *star* string `★_j`. The star is then pushed rightwards through
//! `w_{j-1}, w_{j-2}, …` with [`commute_star`], one string per step, until it
//! glues onto a string or is used up.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schubert_points::schubert_factorization;
use crate::shapes::{Partition, RowStrictTableau};
use crate::weyl::{MonotoneFactorization, MonotoneString, Permutation, Word};

/// The star `★_i = s_{p'} ⋯ s_p`, or nothing once it has glued or dissolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StarString {
    Empty,
    Span { lo: usize, hi: usize },
}

impl StarString {
    pub fn span(lo: usize, hi: usize) -> Self {
        if lo <= hi && lo >= 1 {
            StarString::Span { lo, hi }
        } else {
            StarString::Empty
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, StarString::Empty)
    }

    pub fn as_string(&self) -> Option<MonotoneString> {
        match *self {
            StarString::Empty => None,
            StarString::Span { lo, hi } => Some(MonotoneString::new(lo, hi)),
        }
    }

    pub fn len(&self) -> usize {
        self.as_string().map_or(0, |s| s.len())
    }

    pub fn letters(&self) -> Vec<usize> {
        self.as_string().map_or_else(Vec::new, |s| s.letters().collect())
    }
}

impl fmt::Display for StarString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_string() {
            None => f.write_str("e"),
            Some(s) => s.fmt(f),
        }
    }
}

/// The four ways a star `s_{p'} ⋯ s_p` meets the string `s_{i-ℓ} ⋯ s_{i-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "u8")]
pub enum CommuteCase {
    /// `p < i-ℓ-1`: the two strings commute outright.
    Commute,
    /// `p = i-ℓ-1`: the star glues onto the front of the string.
    Glue,
    /// `p' ≤ i-ℓ ≤ p`: the string loses its first letter, the star its last.
    Absorb,
    /// `i-ℓ < p'`: the star passes through and both its ends drop by one.
    Shift,
}

impl CommuteCase {
    /// Case number 1–4.
    pub fn id(self) -> u8 {
        match self {
            CommuteCase::Commute => 1,
            CommuteCase::Glue => 2,
            CommuteCase::Absorb => 3,
            CommuteCase::Shift => 4,
        }
    }
}

impl From<CommuteCase> for u8 {
    fn from(c: CommuteCase) -> u8 {
        c.id()
    }
}

impl fmt::Display for CommuteCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommuteOutcome {
    pub case: CommuteCase,
    /// `ℓ'_{i-1}`, the length of the rewritten string.
    pub new_length: usize,
    /// `★_{i-1}`; empty after a glue or when the star dissolves.
    pub star: StarString,
}

/// Rewrites `★_i · (s_{i-ℓ} ⋯ s_{i-1})` as `(s_{i-ℓ'} ⋯ s_{i-1}) · ★_{i-1}`.
///
/// An empty string (`ℓ = 0`) passes the star unchanged, or absorbs it as the
/// new string when `p = i-1`.
pub fn commute_star(star: MonotoneString, i: usize, ell: usize) -> Result<CommuteOutcome> {
    let MonotoneString { lo, hi } = star;
    if hi >= i {
        return Err(Error::StarOutOfRange { lo, hi, string: i.saturating_sub(1) });
    }
    if ell >= i {
        return Err(Error::StringOutOfRange {
            string: i - 1,
            length: ell,
            reason: "a string w_{i-1} has at most i-1 letters",
        });
    }
    let start = i - ell;
    let outcome = if hi + 1 < start {
        CommuteOutcome { case: CommuteCase::Commute, new_length: ell, star: StarString::span(lo, hi) }
    } else if hi + 1 == start {
        CommuteOutcome { case: CommuteCase::Glue, new_length: ell + star.len(), star: StarString::Empty }
    } else if lo <= start {
        CommuteOutcome { case: CommuteCase::Absorb, new_length: ell - 1, star: StarString::span(lo, hi - 1) }
    } else {
        CommuteOutcome { case: CommuteCase::Shift, new_length: ell, star: StarString::span(lo - 1, hi - 1) }
    };
    Ok(outcome)
}

/// The letter erased: position `pos` (1-based, left to right) of the string `w_string`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeletionSite {
    pub string: usize,
    pub pos: usize,
}

impl DeletionSite {
    pub fn new(string: usize, pos: usize) -> Self {
        DeletionSite { string, pos }
    }

    /// Every letter of every string of `f`, strings from the top down.
    pub fn all(f: &MonotoneFactorization) -> Vec<DeletionSite> {
        (1..f.rank())
            .rev()
            .flat_map(|j| (1..=f.string_len(j)).map(move |pos| DeletionSite::new(j, pos)))
            .collect()
    }
}

/// `w'_{n-1} ⋯ w'_i · ★_i · w_{i-1} ⋯ w_1` during the rewrite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteState {
    pub n: usize,
    /// Strings at or above `index` are rewritten, those below are original.
    pub index: usize,
    /// `lengths[m-1]` is the current length of the `m`-th string.
    pub lengths: Vec<usize>,
    pub star: StarString,
}

impl RewriteState {
    pub fn word(&self) -> Word {
        let mut letters = Vec::new();
        let string = |m: usize, letters: &mut Vec<usize>| {
            let len = self.lengths[m - 1];
            letters.extend(m + 1 - len..=m);
        };
        for m in (self.index..self.n).rev() {
            string(m, &mut letters);
        }
        letters.extend(self.star.letters());
        for m in (1..self.index).rev() {
            string(m, &mut letters);
        }
        Word::new(letters)
    }

    pub fn product(&self) -> Permutation {
        self.word().evaluate(self.n).expect("letters stay below the rank")
    }
}

/// One application of [`commute_star`] at index `i`, against `w_{i-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteStep {
    pub i: usize,
    pub case: CommuteCase,
    pub star_before: StarString,
    pub star_after: StarString,
    /// `ℓ(w_{i-1})`.
    pub string_len: usize,
    /// `ℓ(w'_{i-1})`.
    pub new_string_len: usize,
}

/// A complete rewrite: the starting state, one state per step, and the result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rewrite {
    pub site: DeletionSite,
    pub source: MonotoneFactorization,
    pub initial: RewriteState,
    pub steps: Vec<RewriteStep>,
    /// `states[k]` follows `steps[k]`.
    pub states: Vec<RewriteState>,
    pub result: MonotoneFactorization,
}

impl Rewrite {
    pub fn all_states(&self) -> impl Iterator<Item = &RewriteState> {
        std::iter::once(&self.initial).chain(&self.states)
    }

    pub fn cases(&self) -> Vec<(usize, u8)> {
        self.steps.iter().map(|s| (s.i, s.case.id())).collect()
    }
}

/// The word of `f` with the letter at `site` erased.
pub fn deleted_word(f: &MonotoneFactorization, site: DeletionSite) -> Result<Word> {
    check_site(f, site)?;
    let offset: usize = (site.string + 1..f.rank()).map(|m| f.string_len(m)).sum();
    Ok(f.to_word().without(offset + site.pos - 1))
}

fn check_site(f: &MonotoneFactorization, site: DeletionSite) -> Result<()> {
    let DeletionSite { string: j, pos } = site;
    if j == 0 || j >= f.rank() || pos == 0 || pos > f.string_len(j) {
        return Err(Error::DeletionOutOfRange { string: j, pos });
    }
    Ok(())
}

/// Erase the letter at `site` and push the star down until it glues or dissolves.
pub fn normalize_deletion(f: &MonotoneFactorization, site: DeletionSite) -> Result<Rewrite> {
    check_site(f, site)?;
    let n = f.rank();
    let j = site.string;
    let first = j + 1 - f.string_len(j);
    let erased = first + site.pos - 1;

    let mut lengths = f.lengths().to_vec();
    lengths[j - 1] = j - erased;
    let initial = RewriteState { n, index: j, lengths, star: StarString::span(first, erased - 1) };

    let mut state = initial.clone();
    let mut steps = Vec::new();
    let mut states = Vec::new();
    while let Some(star) = state.star.as_string() {
        let i = state.index;
        let string_len = state.lengths[i - 2];
        let outcome = commute_star(star, i, string_len)?;
        state.lengths[i - 2] = outcome.new_length;
        state.index = i - 1;
        state.star = outcome.star;
        steps.push(RewriteStep {
            i,
            case: outcome.case,
            star_before: StarString::Span { lo: star.lo, hi: star.hi },
            star_after: outcome.star,
            string_len,
            new_string_len: outcome.new_length,
        });
        states.push(state.clone());
    }
    let result = MonotoneFactorization::from_lengths(n, state.lengths.clone())?;
    Ok(Rewrite { site, source: f.clone(), initial, steps, states, result })
}

/// The monotone factorization of `f` with one letter erased.
pub fn delete_and_normalize(f: &MonotoneFactorization, j: usize, k: usize) -> Result<MonotoneFactorization> {
    Ok(normalize_deletion(f, DeletionSite::new(j, k))?.result)
}

/// One step of the box picture for a tableau with at most two columns.
///
/// Rows of `λ[i]` are numbered from the top; row `r ≥ 2` stands for the
/// reflection `s_{i-r+1}`. Shaded rows are those whose reflection occurs in
/// the star.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColumnTraceStep {
    pub i: usize,
    /// `λ[i]`.
    pub shape: Partition,
    pub shaded_rows: Vec<usize>,
    /// Second-column length of `λ[i]`.
    pub c: usize,
    /// Second-column length of `λ'[i]`.
    pub c_prime: usize,
    /// `λ'[i]`, the sorted shape of `T'[i]` for the tableau `T'` of the result.
    pub prime_shape: Partition,
    pub case: CommuteCase,
    /// Row of `λ[i]` whose last box holds `i`.
    pub box_row: usize,
    /// `ℓ(w_{i-1})` and `ℓ(w'_{i-1})`.
    pub string_len: usize,
    pub new_string_len: usize,
    /// `λ[i-1]` and its shading after the step.
    pub next_shape: Partition,
    pub next_shaded_rows: Vec<usize>,
    /// `c_{i-1}`, and `c'_{i-1}` when `i` can be placed in `λ'[i]`.
    pub next_c: usize,
    pub next_c_prime: Option<usize>,
}

impl TwoColumnTraceStep {
    /// Whether `(c_{i-1}, c'_{i-1})` follows from `(c_i, c'_i)` as the
    /// two-column transition table prescribes. Glue steps always pass.
    pub fn transition_holds(&self) -> bool {
        if self.case == CommuteCase::Glue {
            return true;
        }
        let Some(next_c_prime) = self.next_c_prime else {
            return false;
        };
        if self.c_prime > self.c || next_c_prime > self.next_c {
            return false;
        }
        let gap = self.c - self.c_prime;
        let next_gap = self.next_c - next_c_prime;
        let expected = match (self.case, gap) {
            (CommuteCase::Commute | CommuteCase::Shift, 0) => 0,
            (CommuteCase::Commute | CommuteCase::Shift, 1) => {
                if self.string_len + 1 == self.c {
                    0
                } else {
                    1
                }
            }
            (CommuteCase::Absorb, 0) => {
                if self.new_string_len + 1 == self.c {
                    1
                } else {
                    0
                }
            }
            (CommuteCase::Absorb, 1) => 1,
            _ => return false,
        };
        next_gap == expected
    }

    /// Row index of the first row of length one in `λ[i]`, if any.
    pub fn first_single_row(&self) -> Option<usize> {
        first_single_row(&self.shape)
    }

    pub fn next_first_single_row(&self) -> Option<usize> {
        first_single_row(&self.next_shape)
    }
}

fn first_single_row(shape: &Partition) -> Option<usize> {
    shape.rows().iter().position(|&len| len == 1).map(|r| r + 1)
}

fn second_column(shape: &Partition) -> usize {
    shape.rows().iter().filter(|&&len| len >= 2).count()
}

fn shaded_rows(star: StarString, i: usize) -> Vec<usize> {
    match star {
        StarString::Empty => Vec::new(),
        StarString::Span { lo, hi } => (i + 1 - hi..=i + 1 - lo).collect(),
    }
}

/// Remove the box of `shape` holding the entry placed by a string of length
/// `ell`: the last box of row `ell + 1`, resorting afterwards.
fn remove_placed_box(shape: &mut Vec<usize>, ell: usize) -> bool {
    let Some(&len) = shape.get(ell) else {
        return false;
    };
    let last = shape.iter().rposition(|&l| l == len).expect("row exists");
    shape[last] -= 1;
    if shape[last] == 0 {
        shape.pop();
    }
    true
}

/// The box-level picture of [`normalize_deletion`] for a shape with at most
/// two columns: one entry per star step.
pub fn two_column_trace(tableau: &RowStrictTableau, site: DeletionSite) -> Result<Vec<TwoColumnTraceStep>> {
    if tableau.shape().num_columns() > 2 {
        return Err(Error::UnsupportedShape {
            shape: tableau.shape().to_string(),
            reason: "two-column traces need at most two columns",
        });
    }
    let rewrite = normalize_deletion(&schubert_factorization(tableau), site)?;
    let n = tableau.size();
    let lambda_at = |i: usize| {
        tableau.truncate(i).composition().sorted_shape().expect("T[i] is nonempty for i ≥ 1")
    };

    // λ'[q] for the rewritten strings, built downward from λ'[n] = λ.
    let mut prime: Vec<usize> = tableau.shape().rows().to_vec();
    let mut prime_top = n;
    let mut place_down_to = |target: usize, lengths: &[usize], prime: &mut Vec<usize>| -> Result<()> {
        while prime_top > target {
            let q = prime_top;
            if !remove_placed_box(prime, lengths[q - 2]) {
                return Err(Error::Trace {
                    step: q,
                    reason: format!("no row {} in λ'[{q}] for {q}", lengths[q - 2] + 1),
                });
            }
            prime_top -= 1;
        }
        Ok(())
    };

    let mut trace = Vec::with_capacity(rewrite.steps.len());
    for (step, after) in rewrite.steps.iter().zip(&rewrite.states) {
        let i = step.i;
        place_down_to(i, &after.lengths, &mut prime)?;
        let c_prime = prime.iter().filter(|&&l| l >= 2).count();
        let mut next_prime = prime.clone();
        let next_c_prime = remove_placed_box(&mut next_prime, step.new_string_len)
            .then(|| next_prime.iter().filter(|&&l| l >= 2).count());

        let shape = lambda_at(i);
        let next_shape = lambda_at(i - 1);
        trace.push(TwoColumnTraceStep {
            i,
            c: second_column(&shape),
            c_prime,
            case: step.case,
            box_row: step.string_len + 1,
            string_len: step.string_len,
            new_string_len: step.new_string_len,
            shaded_rows: shaded_rows(step.star_before, i),
            next_shaded_rows: shaded_rows(step.star_after, i - 1),
            next_c: second_column(&next_shape),
            next_c_prime,
            prime_shape: Partition::new(prime.clone()).expect("λ'[i] keeps i ≥ 1 boxes"),
            shape,
            next_shape,
        });
    }
    Ok(trace)
}

/// Side-by-side ASCII diagrams of `λ[i]`, one column per step.
///
/// `[  ]` is a box, `[//]` a shaded box, and the box holding `i` shows its
/// number, in braces when shaded.
pub fn render_trace(steps: &[TwoColumnTraceStep]) -> String {
    const CELL: usize = 4;
    let columns: Vec<Vec<String>> = steps
        .iter()
        .map(|step| {
            let mut lines = vec![
                format!("i={}", step.i),
                format!("case {}", step.case),
                format!("c={} c'={}", step.c, step.c_prime),
            ];
            for (r, &len) in step.shape.rows().iter().enumerate() {
                let row = r + 1;
                let shaded = step.shaded_rows.contains(&row);
                let mut line = String::new();
                for col in 1..=len {
                    let holds_i = row == step.box_row && col == len;
                    let cell = match (holds_i, shaded) {
                        (true, false) => format!("[{:>2}]", step.i),
                        (true, true) => format!("{{{:>2}}}", step.i),
                        (false, true) => "[//]".to_string(),
                        (false, false) => "[  ]".to_string(),
                    };
                    line.push_str(&cell);
                }
                lines.push(line);
            }
            lines
        })
        .collect();
    let width = columns
        .iter()
        .flat_map(|c| c.iter().map(|l| l.chars().count()))
        .max()
        .unwrap_or(0)
        .max(2 * CELL)
        + 2;
    let height = columns.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    for line in 0..height {
        let mut text = String::new();
        for column in &columns {
            let cell = column.get(line).map(String::as_str).unwrap_or("");
            text.push_str(cell);
            text.extend(std::iter::repeat_n(' ', width - cell.chars().count()));
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(lo: usize, hi: usize) -> MonotoneString {
        MonotoneString::new(lo, hi)
    }

    #[test]
    fn table_cases() {
        let out = commute_star(ms(6, 8), 10, 2).unwrap();
        assert_eq!((out.case, out.new_length, out.star), (CommuteCase::Absorb, 1, StarString::span(6, 7)));
        let out = commute_star(ms(6, 7), 9, 5).unwrap();
        assert_eq!((out.case, out.new_length, out.star), (CommuteCase::Shift, 5, StarString::span(5, 6)));
        let out = commute_star(ms(3, 3), 5, 1).unwrap();
        assert_eq!((out.case, out.new_length, out.star), (CommuteCase::Glue, 2, StarString::Empty));
        let out = commute_star(ms(1, 1), 9, 2).unwrap();
        assert_eq!((out.case, out.new_length, out.star), (CommuteCase::Commute, 2, StarString::span(1, 1)));
    }

    #[test]
    fn empty_string_passes_or_glues() {
        let out = commute_star(ms(3, 3), 5, 0).unwrap();
        assert_eq!((out.case, out.new_length, out.star), (CommuteCase::Commute, 0, StarString::span(3, 3)));
        let out = commute_star(ms(2, 3), 4, 0).unwrap();
        assert_eq!((out.case, out.new_length, out.star), (CommuteCase::Glue, 2, StarString::Empty));
    }

    #[test]
    fn dissolving_absorb() {
        let out = commute_star(ms(4, 4), 6, 2).unwrap();
        assert_eq!((out.case, out.new_length, out.star), (CommuteCase::Absorb, 1, StarString::Empty));
    }

    #[test]
    fn rejects_bad_stars() {
        assert!(matches!(commute_star(ms(3, 5), 5, 1), Err(Error::StarOutOfRange { .. })));
        assert!(matches!(commute_star(ms(1, 1), 5, 5), Err(Error::StringOutOfRange { .. })));
    }

    #[test]
    fn single_letter_deletion() {
        let f = MonotoneFactorization::from_lengths(2, vec![1]).unwrap();
        assert_eq!(delete_and_normalize(&f, 1, 1).unwrap(), MonotoneFactorization::identity(2));
        assert!(delete_and_normalize(&f, 1, 2).is_err());
        assert!(delete_and_normalize(&f, 2, 1).is_err());
        assert!(delete_and_normalize(&f, 0, 1).is_err());
    }

    #[test]
    fn counterexample_deletion() {
        // w_5 = s3 s4 s5, w_3 = s2 s3, w_1 = s1; erase s4.
        let f = MonotoneFactorization::from_lengths(6, vec![1, 0, 2, 0, 3]).unwrap();
        let rewrite = normalize_deletion(&f, DeletionSite::new(5, 2)).unwrap();
        assert_eq!(rewrite.result.lengths(), &[1, 1, 2, 0, 1]);
        assert_eq!(rewrite.cases(), vec![(5, 1), (4, 4), (3, 2)]);
        let expected: Word = "s5 s2 s3 s2 s1".parse().unwrap();
        assert_eq!(rewrite.result.to_permutation(), expected.evaluate(6).unwrap());
    }

    #[test]
    fn states_preserve_product() {
        let f = MonotoneFactorization::from_lengths(6, vec![1, 2, 2, 3, 4]).unwrap();
        for site in DeletionSite::all(&f) {
            let target = deleted_word(&f, site).unwrap().evaluate(6).unwrap();
            let rewrite = normalize_deletion(&f, site).unwrap();
            for state in rewrite.all_states() {
                assert_eq!(state.product(), target, "{site:?}");
            }
        }
    }

    #[test]
    fn trace_requires_two_columns() {
        let t: RowStrictTableau = "1,2,3/4".parse().unwrap();
        assert!(matches!(two_column_trace(&t, DeletionSite::new(3, 1)), Err(Error::UnsupportedShape { .. })));
    }

    #[test]
    fn leading_letter_has_no_trace() {
        let t: RowStrictTableau = "1,2/3,4/5".parse().unwrap();
        // w_4 = s3 s4; erasing s3 leaves no star.
        assert!(two_column_trace(&t, DeletionSite::new(4, 1)).unwrap().is_empty());
    }
}

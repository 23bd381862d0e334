//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use springer_points::shapes::{Partition, RowStrictTableau};
use springer_points::weyl::Permutation;

/// All permutations of `1..=n` in one-line notation, lexicographic.
pub fn all_one_line(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn all_permutations(n: usize) -> Vec<Permutation> {
    all_one_line(n).iter().map(|v| Permutation::from_one_line(v).unwrap()).collect()
}

pub fn inversions(one_line: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..one_line.len() {
        for j in i + 1..one_line.len() {
            if one_line[i] > one_line[j] {
                count += 1;
            }
        }
    }
    count
}

/// `s_{a_1} ∘ ⋯ ∘ s_{a_k}` evaluated pointwise, rightmost letter first.
pub fn word_product(letters: &[usize], n: usize) -> Permutation {
    let one_line: Vec<usize> = (1..=n)
        .map(|x| {
            letters.iter().rev().fold(x, |y, &a| {
                if y == a {
                    a + 1
                } else if y == a + 1 {
                    a
                } else {
                    y
                }
            })
        })
        .collect();
    Permutation::from_one_line(&one_line).unwrap()
}

/// Every product of a subword of `word`: the lower ideal when `word` is reduced.
pub fn subword_ideal(word: &[usize], n: usize) -> HashSet<Permutation> {
    (0u32..1 << word.len())
        .map(|mask| {
            let sub: Vec<usize> =
                word.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &a)| a).collect();
            word_product(&sub, n)
        })
        .collect()
}

/// A reduced word by bubble-sorting: repeatedly strip a right descent.
pub fn bubble_word(w: &Permutation) -> Vec<usize> {
    let mut v = w.one_line();
    let mut word = Vec::new();
    while let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]) {
        v.swap(i, i + 1);
        word.push(i + 1);
    }
    word.reverse();
    word
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn multinomial(shape: &Partition) -> u128 {
    factorial(shape.size()) / shape.rows().iter().map(|&r| factorial(r)).product::<u128>()
}

pub fn hook_length_count(shape: &Partition) -> u128 {
    let conj = shape.conjugate();
    let hooks: u128 = shape
        .boxes()
        .map(|(r, c)| (shape.rows()[r - 1] - c + conj.rows()[c - 1] - r + 1) as u128)
        .product();
    factorial(shape.size()) / hooks
}

/// Row-strict fillings by sorting consecutive chunks of every permutation.
pub fn brute_row_strict(shape: &Partition) -> HashSet<RowStrictTableau> {
    all_one_line(shape.size())
        .into_iter()
        .map(|v| {
            let mut rows = Vec::new();
            let mut start = 0;
            for &len in shape.rows() {
                let mut row = v[start..start + len].to_vec();
                row.sort_unstable();
                rows.push(row);
                start += len;
            }
            RowStrictTableau::from_rows(rows).unwrap()
        })
        .collect()
}

/// Partitions of every `n` in `1..=max_n`.
pub fn partitions_up_to(max_n: usize) -> Vec<Partition> {
    (1..=max_n).flat_map(Partition::all).collect()
}

pub fn is_valid(shape: &Partition) -> bool {
    shape.num_rows() <= 3 || shape.num_columns() <= 2
}

/// `Σ t^{ℓ(v)}` coefficients over a set of permutations, by inversion count.
pub fn length_generating(set: &HashSet<Permutation>) -> Vec<u64> {
    let mut coeffs = Vec::new();
    for v in set {
        let d = inversions(&v.one_line());
        if coeffs.len() <= d {
            coeffs.resize(d + 1, 0);
        }
        coeffs[d] += 1;
    }
    coeffs
}

use std::collections::HashSet;

use super::{Permutation, PoincarePolynomial};
use crate::error::{Error, Result};

/// `v ≤ w` in Bruhat order, by the rank-matrix criterion: for every prefix
/// `1..=i` and threshold `k`, `v` has no more entries `≥ k` there than `w`.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    if v.rank() != w.rank() {
        return Err(Error::RankMismatch { left: v.rank(), right: w.rank() });
    }
    let n = v.rank();
    let (vi, wi) = (v.images(), w.images());
    let mut count_v = vec![0u32; n];
    let mut count_w = vec![0u32; n];
    for i in 0..n {
        count_v[..=vi[i] as usize].iter_mut().for_each(|c| *c += 1);
        count_w[..=wi[i] as usize].iter_mut().for_each(|c| *c += 1);
        if count_v.iter().zip(&count_w).any(|(a, b)| a > b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All `v ≤ w`, including the identity and `w` itself.
pub fn lower_ideal(w: &Permutation) -> HashSet<Permutation> {
    union_of_ideals(std::slice::from_ref(w))
        .expect("a single generator has a consistent rank")
}

/// The union of the lower ideals of `generators`, each element once.
///
/// Breadth-first descent along Bruhat covers with one shared visited set, so
/// overlapping ideals are walked once.
pub fn union_of_ideals(generators: &[Permutation]) -> Result<HashSet<Permutation>> {
    if let Some(first) = generators.first() {
        if let Some(bad) = generators.iter().find(|g| g.rank() != first.rank()) {
            return Err(Error::RankMismatch { left: first.rank(), right: bad.rank() });
        }
    }
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut frontier: Vec<Permutation> = Vec::new();
    for g in generators {
        if seen.insert(g.clone()) {
            frontier.push(g.clone());
        }
    }
    while let Some(w) = frontier.pop() {
        for v in w.lower_covers() {
            if !seen.contains(&v) {
                seen.insert(v.clone());
                frontier.push(v);
            }
        }
    }
    Ok(seen)
}

/// `Σ t^{ℓ(v)}` over the union of the lower ideals of `generators`.
pub fn union_poincare(generators: &[Permutation]) -> Result<PoincarePolynomial> {
    Ok(PoincarePolynomial::from_degrees(union_of_ideals(generators)?.iter().map(Permutation::length)))
}

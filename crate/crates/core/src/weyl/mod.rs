//! The symmetric group `S_n` as the Weyl group of type `A_{n-1}`.
//!
//! Products compose as functions: `(uv)(x) = u(v(x))`, so the word
//! `s_{a_1} s_{a_2} ⋯ s_{a_k}` evaluates to `s_{a_1} ∘ ⋯ ∘ s_{a_k}` and
//! right-multiplying by `s_i` swaps the entries in positions `i` and `i+1`
//! of the one-line notation.

mod bruhat;
mod factorization;
mod permutation;
mod poincare;
mod word;

pub use bruhat::{bruhat_leq, lower_ideal, union_of_ideals, union_poincare};
pub use factorization::{canonical_factorization, factorization_to_permutation, MonotoneFactorization, MonotoneString};
pub use permutation::{length, Permutation};
pub use poincare::PoincarePolynomial;
pub use word::{word_to_permutation, Word};

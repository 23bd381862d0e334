//! Schubert points of row-strict tableaux and exact comparisons between the
//! Betti numbers of Springer fibers and unions of Schubert varieties in type A.
//!
//! The crate is organised bottom-up:
//!
//! * [`shapes`]: partitions, compositions, row-strict and standard tableaux,
//!   base fillings, truncation, dominance order.
//! * [`weyl`]: permutations of `S_n`, words in simple reflections, the
//!   monotone-string factorization, Bruhat order, lower ideals and Poincaré
//!   polynomials.
//! * [`springer`]: the tableau/permutation correspondence for the Springer
//!   fiber of a nilpotent of Jordan type `λ`, dimension pairs and ℓ-vectors.
//! * [`schubert_points`]: the Schubert point `w_T` of a tableau and its inverse.
//! * [`rewrite`]: star propagation after erasing one simple reflection.
//! * [`verify`]: theorem-level checks and scans over families of shapes.
//!
//! Everything is exact integer arithmetic and all values are immutable.

pub mod error;
pub mod rewrite;
pub mod schubert_points;
pub mod shapes;
pub mod springer;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use rewrite::{
    commute_star, delete_and_normalize, normalize_deletion, two_column_trace, CommuteCase, DeletionSite, StarString,
};
pub use schubert_points::{
    is_schubert_point, monomial, schubert_point, schubert_point_from_ell, schubert_point_set,
    standard_shortcut, Monomial, SchubertPoints,
};
pub use shapes::{Composition, Partition, RowStrictTableau, StandardTableau};
pub use springer::{dimension_pairs, ell_vector, springer_permutation, springer_poincare, EllVector};
pub use verify::{
    check_closure, check_deletion_closure, check_dominance, check_maximality, check_theorem1, scan, Claim,
    Family, VerificationReport, Verdict,
};
pub use weyl::{
    bruhat_leq, canonical_factorization, lower_ideal, union_poincare, MonotoneFactorization,
    Permutation, PoincarePolynomial, Word,
};

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("simple reflection s{letter} does not exist in S{rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("partitions of different sizes: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("ℓ_{index} = {value} exceeds its bound {bound}")]
    EllOutOfRange { index: usize, value: usize, bound: usize },

    #[error("tableau is not standard: {0}")]
    NotStandard(String),

    #[error("star s{lo}..s{hi} cannot pass string w_{string}")]
    StarOutOfRange { lo: usize, hi: usize, string: usize },

    #[error("string w_{string} of length {length}: {reason}")]
    StringOutOfRange { string: usize, length: usize, reason: &'static str },

    #[error("no letter at position {pos} of string w_{string}")]
    DeletionOutOfRange { string: usize, pos: usize },

    #[error("unsupported shape {shape}: {reason}")]
    UnsupportedShape { shape: String, reason: &'static str },

    #[error("shapes {lambda} and {mu} are not ordered λ ≥ μ in dominance order")]
    NotDominating { lambda: String, mu: String },

    #[error("trace broken at step {step}: {reason}")]
    Trace { step: usize, reason: String },
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("entry {value} at position {position} is outside 0..={n}")]
    EntryOutOfRange { position: usize, value: usize, n: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("partial transformation {0} is not nilpotent")]
    NotNilpotent(String),
    #[error("parent map contains a cycle")]
    CyclicParent,
    #[error("operation needs a single tree, got a forest with {0} components")]
    NotATree(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("plethysm argument has a nonzero constant term")]
    ConstantTerm,
    #[error("symmetric function is not homogeneous")]
    NotHomogeneous,
    #[error("non-integer multiplicity {value} for {partition}")]
    NonIntegerMultiplicity { partition: String, value: String },
    #[error("negative multiplicity {value} for {partition}")]
    NegativeMultiplicity { partition: String, value: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("integrity check failed: {0}")]
    Integrity(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

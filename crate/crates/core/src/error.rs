use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid skew tableau: {0}")]
    InvalidSkewTableau(String),
    #[error("invalid RSK pair: {0}")]
    InvalidPair(String),
    #[error("entry {entry} exceeds the maximal entry {max}")]
    EntryOutOfRange { entry: u32, max: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("not symmetric: leading support {0} is not a partition")]
    NotSymmetric(String),
    #[error("empty expansion")]
    EmptyExpansion,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

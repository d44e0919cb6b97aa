use thiserror::Error;

use crate::quiddity::Classification;

pub type Result<T> = std::result::Result<T, FriezeError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("quiddity sequence must not be empty")]
    Empty,
    #[error("quiddity entries must be positive integers (got {0})")]
    NonPositiveEntry(i64),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("entry at position {index} is {value}, not 1")]
    NotAOne { index: usize, value: u64 },
    #[error("illegal reduction at position {index}: {reason}")]
    IllegalReduction { index: usize, reason: String },
    #[error("position {index} is outside a sequence of length {len}")]
    PositionOutOfRange { index: usize, len: usize },
    #[error("quiddity sequence is not of infinite type (classified {0:?})")]
    NotInfiniteType(Classification),
    #[error("quiddity sequence is not skeletal")]
    NotSkeletal,
    #[error("frieze entry a({i},{j}) is undefined: need j >= {min_j}")]
    IndexOutOfRange { i: i64, j: i64, min_j: i64 },
    #[error("not a non-oriented cycle word: {0}")]
    NotACycleWord(String),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("tube rank {tube} does not match quiddity length {quiddity}")]
    RankMismatch { tube: usize, quiddity: usize },
    #[error("excluded pairs overlap or leave the window: {0}")]
    OverlappingPairs(String),
    #[error("level {0} is below 3")]
    LevelTooSmall(usize),
    #[error("i/o failure: {0}")]
    IoFailure(String),
}

impl FriezeError {
    /// Stable variant name, used by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            FriezeError::Empty => "Empty",
            FriezeError::NonPositiveEntry(_) => "NonPositiveEntry",
            FriezeError::Parse { .. } => "Parse",
            FriezeError::NotAOne { .. } => "NotAOne",
            FriezeError::IllegalReduction { .. } => "IllegalReduction",
            FriezeError::PositionOutOfRange { .. } => "PositionOutOfRange",
            FriezeError::NotInfiniteType(_) => "NotInfiniteType",
            FriezeError::NotSkeletal => "NotSkeletal",
            FriezeError::IndexOutOfRange { .. } => "IndexOutOfRange",
            FriezeError::NotACycleWord(_) => "NotACycleWord",
            FriezeError::InvalidTriangulation(_) => "InvalidTriangulation",
            FriezeError::RankMismatch { .. } => "RankMismatch",
            FriezeError::OverlappingPairs(_) => "OverlappingPairs",
            FriezeError::LevelTooSmall(_) => "LevelTooSmall",
            FriezeError::IoFailure(_) => "IOFailure",
        }
    }
}

impl From<std::io::Error> for FriezeError {
    fn from(err: std::io::Error) -> Self {
        FriezeError::IoFailure(err.to_string())
    }
}

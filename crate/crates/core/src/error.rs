use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("car {car} cannot park")]
    NotAParkingFunction { car: usize },

    #[error("not a unit-interval parking function")]
    NotUnitInterval,

    #[error("empty input")]
    EmptyInput,

    #[error("n = {n} exceeds the configured limit of {max}")]
    LimitExceeded { n: usize, max: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("not a permutation of 1..={n}")]
    NotAPermutation { n: usize },

    #[error("not a Fubini ranking")]
    NotAFubiniRanking,

    #[error("faces belong to permutohedra of different orders ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid preference list: {0}")]
    InvalidPrefList(String),

    #[error("invalid ordered set partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable short identifier, used by the CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotAParkingFunction { .. } => "not-a-parking-function",
            Error::NotUnitInterval => "not-unit-interval",
            Error::EmptyInput => "empty-input",
            Error::LimitExceeded { .. } => "limit-exceeded",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::NotAPermutation { .. } => "not-a-permutation",
            Error::NotAFubiniRanking => "not-a-fubini-ranking",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::Domain(_) => "domain",
            Error::InvalidPrefList(_) => "invalid-pref-list",
            Error::InvalidPartition(_) => "invalid-partition",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

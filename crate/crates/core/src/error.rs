use thiserror::Error;

/// Failure to read a [`Natural`](crate::Natural) from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseNaturalError {
    #[error("empty number")]
    Empty,
    #[error("negative numbers are not naturals")]
    Negative,
    #[error("invalid digit {digit:?} at position {position}")]
    InvalidDigit { digit: char, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration would exceed its configured size limit.
    #[error("{what} {requested} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: String,
        cap: u64,
    },
    #[error("position has no piles")]
    EmptyPosition,
    #[error("expected {expected} piles, got {found}")]
    WrongArity { expected: usize, found: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

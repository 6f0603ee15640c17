use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LejaError {
    #[error("binary statistics are undefined for k = 0")]
    ZeroIndex,
    #[error("{what} = {value} is out of range [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },
    #[error("section length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("section is not the canonical Leja section of its length")]
    NotCanonical,
    #[error("dyadic angle exceeds {max} fractional bits")]
    AngleOverflow { max: u32 },
    #[error("dimension mismatch: expected {expected} values, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("nodes {0} and {1} coincide")]
    RepeatedNode(usize, usize),
    #[error("empty node section")]
    EmptySection,
    #[error("singular product: {0}")]
    Singular(String),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, LejaError>;

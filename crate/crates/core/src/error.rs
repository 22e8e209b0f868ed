use std::fmt;

use thiserror::Error;

/// Which endpoint function of a fuzzy number an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Lower,
    Upper,
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Lower => f.write_str("lower"),
            Endpoint::Upper => f.write_str("upper"),
        }
    }
}

/// Coarse classification used by the CLI to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Validation,
    Algorithmic,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid level grid: {0}")]
    InvalidLevelGrid(String),

    #[error("invalid domain grid: {0}")]
    InvalidDomainGrid(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("non-finite {endpoint} endpoint at level index {index}")]
    NonFinite { endpoint: Endpoint, index: usize },

    #[error("{endpoint} endpoint is not monotone at level index {index} ({previous} -> {value})")]
    MonotonicityViolation {
        endpoint: Endpoint,
        index: usize,
        previous: f64,
        value: f64,
    },

    #[error("endpoints cross at level index {index} (lo = {lo} > hi = {hi})")]
    CrossingViolation { index: usize, lo: f64, hi: f64 },

    #[error("shape parameters out of order: {params:?}")]
    OrderViolation { params: Vec<f64> },

    #[error("value {value} outside the admissible range")]
    OutOfRange { value: f64 },

    #[error("operands live on different grids")]
    GridMismatch,

    #[error("multiplier value {value} at domain index {index} is outside [0, 1]")]
    RangeViolation { index: usize, value: f64 },

    #[error("function class has an empty enumeration")]
    EmptyClass,

    #[error("function rejected by the class membership rule: {0}")]
    NotInClass(String),

    #[error("multiplier {index} is not in the sampled Conv(W)")]
    NotAMultiplier { index: usize },

    #[error("invalid bump specification: {0}")]
    InvalidBump(String),

    #[error("no admissible bump around domain index {center}")]
    CannotSeparate { center: usize },

    #[error("multiplier family does not separate the points of the domain")]
    SeparationHypothesisUnmet,

    #[error("domain index {index} is not covered by any inner neighborhood")]
    CoverFailure { index: usize },

    #[error("approximant rejected by the class membership rule")]
    MembershipFailure,

    #[error("approximation bound violated: achieved {achieved} > bound {bound}")]
    BoundViolated { achieved: f64, bound: f64 },

    #[error("epsilon must be positive and finite, got {0}")]
    InvalidEpsilon(f64),

    #[error("domain index {index} out of bounds for a domain of {len} points")]
    IndexOutOfBounds { index: usize, len: usize },
}

impl Error {
    /// Short stable identifier, printed in machine-readable error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidLevelGrid(_) => "InvalidLevelGrid",
            Error::InvalidDomainGrid(_) => "InvalidDomainGrid",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NonFinite { .. } => "NonFinite",
            Error::MonotonicityViolation { .. } => "MonotonicityViolation",
            Error::CrossingViolation { .. } => "CrossingViolation",
            Error::OrderViolation { .. } => "OrderViolation",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::GridMismatch => "GridMismatch",
            Error::RangeViolation { .. } => "RangeViolation",
            Error::EmptyClass => "EmptyClass",
            Error::NotInClass(_) => "NotInClass",
            Error::NotAMultiplier { .. } => "NotAMultiplier",
            Error::InvalidBump(_) => "InvalidBump",
            Error::CannotSeparate { .. } => "CannotSeparate",
            Error::SeparationHypothesisUnmet => "SeparationHypothesisUnmet",
            Error::CoverFailure { .. } => "CoverFailure",
            Error::MembershipFailure => "MembershipFailure",
            Error::BoundViolated { .. } => "BoundViolated",
            Error::InvalidEpsilon(_) => "InvalidEpsilon",
            Error::IndexOutOfBounds { .. } => "IndexOutOfBounds",
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::CannotSeparate { .. }
            | Error::SeparationHypothesisUnmet
            | Error::CoverFailure { .. }
            | Error::MembershipFailure
            | Error::BoundViolated { .. } => ErrorClass::Algorithmic,
            _ => ErrorClass::Validation,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

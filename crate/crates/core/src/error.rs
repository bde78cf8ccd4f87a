use thiserror::Error;

/// Errors raised by field, nearfield and near-vector-space operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible over F_{p}")]
    NotIrreducible { p: u64 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("element has order {order}, a generator needs order {expected}")]
    NotGenerator { order: u64, expected: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("argument must be non-zero")]
    ZeroArgument,
    #[error("({q}, {n}) is not a Dickson pair")]
    NotDicksonPair { q: u64, n: u64 },
    #[error("size {size} exceeds the scan limit {cap}")]
    TooLarge { size: u128, cap: u128 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vectors do not belong to the same nearfield")]
    MixedContexts,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code, used in CLI reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::NotIrreducible { .. } => "NotIrreducible",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::NotGenerator { .. } => "NotGenerator",
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroArgument => "ZeroArgument",
            Error::NotDicksonPair { .. } => "NotDicksonPair",
            Error::TooLarge { .. } => "TooLarge",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::MixedContexts => "MixedContexts",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::OutOfRange(_) => "OutOfRange",
            Error::Parse { .. } => "ParseError",
            Error::Unsupported(_) => "Unsupported",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

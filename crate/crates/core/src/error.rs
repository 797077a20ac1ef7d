use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gap {0} is not a positive integer (0 always belongs to a numerical set)")]
    InvalidGap(i64),

    #[error("generator {0} is not a positive integer")]
    InvalidGenerator(i64),

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generators have gcd {0}; the complement would be infinite")]
    GcdNotOne(i64),

    #[error("Frobenius number {frobenius} exceeds the capacity limit {limit}")]
    CapacityExceeded { frobenius: i64, limit: i64 },

    #[error("the set is not closed under addition ({x} + {y} = {} is a gap)", x + y)]
    NotClosed { x: i64, y: i64 },

    #[error("{op} is undefined on the natural numbers (the set has no gaps)")]
    NaturalNumbers { op: &'static str },

    #[error("{op} requires a non-ordinary set")]
    Ordinary { op: &'static str },

    #[error("{what} index {index} out of range (valid: {min}..={max})")]
    OutOfRange {
        what: &'static str,
        index: i64,
        min: i64,
        max: i64,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

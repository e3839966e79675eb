use thiserror::Error;

use crate::scalar::Var;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("variable mismatch: {} vs {}", .0.name(), .1.name())]
    VariableMismatch(Var, Var),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("word of degree {degree} exceeds the confirmed bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("completion did not stabilize; last overlap `{overlap}`")]
    CompletionFailed { overlap: String },
    #[error("value {value} out of range: {what}")]
    OutOfRange { what: String, value: u64 },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("invalid embedding positions {0:?}")]
    InvalidPositions((usize, usize)),
    #[error("closure exceeded dimension cap {cap}; runaway word `{word}`")]
    DimensionCap { cap: usize, word: String },
    #[error("not a central idempotent: {0}")]
    NotCentralIdempotent(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

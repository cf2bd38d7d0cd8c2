//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a power series: numerator valuation {num} < denominator valuation {den}")]
    NotAPowerSeries { num: usize, den: usize },
    #[error("pole at t=0")]
    PoleAtZero,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown function '{0}'")]
    UnknownFunction(String),
    #[error("unknown group '{0}'")]
    UnknownGroup(String),
    #[error("missing assignment for c{0}")]
    MissingAssignment(u32),
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("shape violation: {0}")]
    Shape(String),
    #[error("invalid character table: {0}")]
    Character(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

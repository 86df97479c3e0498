use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable context mismatch: {left} vs {right} variables")]
    ContextMismatch { left: usize, right: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial is not divisible")]
    NotDivisible,

    #[error("fraction is not a Laurent polynomial")]
    NotLaurent,

    #[error("Laurent phenomenon violated while mutating at {index}: {detail}")]
    LaurentViolation { index: usize, detail: String },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid exchange matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid seed: {0}")]
    InvalidSeed(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("the zero ideal cannot be used to saturate")]
    ZeroIdeal,

    #[error("degenerate generator `{0}` (zero numerator)")]
    DegenerateGenerator(String),

    #[error("Groebner step budget of {budget} S-pair reductions exhausted")]
    BudgetExceeded { budget: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("I/O error: {0}")]
    Io(String),

    #[error("JSON error: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

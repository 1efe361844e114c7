use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonempty tree")]
    EmptyTree,

    #[error("trees have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),

    #[error("pair is not a Tamari interval")]
    NotAnInterval,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("budget exceeded: {what} would exceed the limit of {limit}")]
    BudgetExceeded { what: &'static str, limit: u64 },

    #[error("formula requires n >= 1, got {0}")]
    NonPositive(i64),

    #[error("inexact division: {numerator} / {denominator}")]
    InexactDivision { numerator: String, denominator: String },

    #[error("series has no invertible constant term")]
    NonUnit,

    #[error("derivative of the equation is not invertible at the origin")]
    SingularJacobian,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("data file checksum mismatch: expected {expected}, got {actual}")]
    Checksum { expected: String, actual: String },
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}

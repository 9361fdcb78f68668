use thiserror::Error;

/// Errors raised by the monomial, path and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("invalid monomial `{0}`")]
    ParseMonomial(String),

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("power t = {t} outside the admissible range {lo}..={hi}")]
    PowerOutOfRange { t: u32, lo: u32, hi: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {what} would exceed {limit}")]
    BudgetExceeded { what: &'static str, limit: usize },

    #[error("depth is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("depth is undefined for the unit ideal")]
    UnitIdeal,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::qexp::QContext;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("q = {q} is outside the {context} domain {range}", range = context.range_label())]
    QOutOfDomain { q: f64, context: QContext },

    #[error("alpha(q) is undefined at q = 1")]
    AlphaAtUnity,

    #[error("{what} must be positive and finite, got {value}")]
    NotPositive { what: &'static str, value: f64 },

    #[error("invalid interval [{lower}, {upper}]")]
    InvalidInterval { lower: f64, upper: f64 },

    #[error("tolerance {0} is below the supported floor of 1e-13")]
    ToleranceTooSmall(f64),

    #[error("window [{lower}, {upper}] is not contained in the domain of {function}")]
    WindowOutsideDomain { function: String, lower: f64, upper: f64 },

    #[error("integral diverges: {0}")]
    Divergent(String),

    #[error("test function {name} does not reproduce f(0) = {expected} (got {got})")]
    BadTestFunction { name: String, expected: f64, got: f64 },

    #[error("ladder must hold at least 3 ascending values with ratio >= 10")]
    InvalidLadder,
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series with no nonzero coefficient within its precision")]
    DivisionByZeroSeries,
    #[error(
        "coefficient of z^{exponent} requested, but the series is only known below z^{precision}"
    )]
    PrecisionExceeded { exponent: i64, precision: i64 },
    #[error("odd-power coefficient at z^{exponent} is nonzero; cannot substitute Z = z^2")]
    OddCoefficientPresent { exponent: i64 },
    #[error("coefficient of z^{exponent} is not an integer")]
    NonIntegral { exponent: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("semilength must be at least 1 (the empty path is not counted), got {0}")]
    EmptyPath(u64),
    #[error("a table up to {n_max} steps cannot answer a question about {requested} steps")]
    TableTooShort { n_max: usize, requested: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("step sequence goes below the axis at step {0}")]
    BelowAxis(usize),
    #[error("brute-force enumeration is capped at {cap} steps, got {requested}")]
    CapExceeded { cap: usize, requested: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("Newton iteration stalled: residual valuation {previous} -> {current} at iteration {iteration}")]
    NonConvergence {
        iteration: usize,
        previous: i64,
        current: i64,
    },
    #[error("expected a power series but found a term at z^{exponent}")]
    NegativeValuation { exponent: i64 },
    #[error("precision {requested} is below the minimum of {minimum}")]
    PrecisionTooLow { requested: i64, minimum: i64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

impl KernelError {
    pub(crate) fn check_power_series(s: &Series) -> Result<(), KernelError> {
        if s.valuation() < 0 && !s.is_zero() {
            return Err(KernelError::NegativeValuation {
                exponent: s.valuation(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("sequence {0} not found")]
    NotFound(String),
    #[error("{id}: malformed b-file line {line}: {text:?}")]
    ParseError {
        id: String,
        line: usize,
        text: String,
    },
    #[error("network error fetching {id}: {message}")]
    NetworkError { id: String, message: String },
    #[error("series is only known below Z^{precision}, comparison needs Z^{needed}")]
    InsufficientPrecision { precision: i64, needed: i64 },
    #[error("{id} has {available} terms, comparison needs {needed}")]
    InsufficientTerms {
        id: String,
        available: usize,
        needed: usize,
    },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

use thiserror::Error;

/// Errors raised by the library. Every variant carries a human-readable
/// description of the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or mismatched parameters (e.g. `m < n`, wrong weight length).
    #[error("parameter error: {0}")]
    Parameter(String),
    /// Input outside the mathematical domain of an operation
    /// (non-dominant weight, weight outside the principal block, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A desk-scale resource bound would be exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// No quasipolynomial consistent with the data was found.
    #[error("fit error: {0}")]
    Fit(String),
    /// A caller-supplied object violates a stated precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An internal consistency assertion failed.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

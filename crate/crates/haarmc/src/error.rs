use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the samplers, special functions and estimators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("f(.|1) is degenerate: point masses at -1 and +1 have no density")]
    DegenerateDensity,
    #[error("f(x|2) diverges at |x| = 1")]
    PoleAtBoundary,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not orthogonal: defect {defect:.3e} exceeds {tol:.3e}")]
    NotOrthogonal { defect: f64, tol: f64 },
    #[error("not a unit vector: norm deviates from 1 by {0:.3e}")]
    NotUnit(f64),
    #[error("(1,1) entry squared within {0:.3e} of 1; the block partition is undefined there, resample and retry")]
    Gamma11AtBoundary(f64),
    #[error("unsupported dimension p = {p}: {reason}")]
    UnsupportedDimension { p: usize, reason: &'static str },
    #[error("{what} did not converge within {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },
    #[error("no exact representation for k = {0}; use the direct method")]
    NoExactRepresentation(u32),
    #[error("sample size {n} too small; need at least {min}")]
    SampleTooSmall { n: usize, min: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

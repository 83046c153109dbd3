use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by construction and by operations with enforced preconditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point {0} lies outside the open unit disk (margin {1:e})")]
    OutsideDisk(Complex64, f64),
    #[error("ball radius {0} must lie in (0, 1)")]
    BadRadius(f64),
    #[error("ball intersection requires equal radii, got {0} and {1}")]
    UnequalRadii(f64, f64),
    #[error("omitted factor index {index} out of range for {len} zeros")]
    OmitOutOfRange { index: usize, len: usize },
    #[error("sample count must be positive")]
    ZeroSamples,
    #[error("gamma must lie in (0, 1), got {0}")]
    BadGamma(f64),
    #[error("coefficient vector length {got} does not match {expected} points")]
    LengthMismatch { got: usize, expected: usize },
    #[error("operation requires pairwise distinct points (repeated point at indices {0} and {1})")]
    RepeatedPoints(usize, usize),
    #[error("empty measure")]
    EmptyMeasure,
    #[error("alpha column {col} has squared norm {normsq} (must be 1 within 1e-10)")]
    ColumnNotNormalized { col: usize, normsq: f64 },
    #[error("perturbation at index {index} has distance {rho} exceeding the allowed {limit}")]
    PerturbationTooLarge { index: usize, rho: f64, limit: f64 },
    #[error("beta must lie in (0, 1), got {0}")]
    BadBeta(f64),
    #[error("sequence is not {m}-separated at radius {beta}: ball at {witness} holds {count} points")]
    NotSeparated {
        m: usize,
        beta: f64,
        witness: Complex64,
        count: usize,
    },
    #[error("no separation radius found on the search grid (near-boundary cluster?)")]
    SeparationGridExhausted,
    #[error("group of size {p} exceeds the number of seed vectors m = {m}")]
    GroupTooLarge { p: usize, m: usize },
    #[error("lower frame bound D^2 must be positive, got {0}")]
    NonpositiveLowerBound(f64),
    #[error("seed vectors vanish at coordinate {0}: standard-basis lower bound is 0")]
    ZeroColumn(usize),
    #[error("vector {index} has length {got}, expected {expected}")]
    VectorLengthMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("system must have at least one seed vector")]
    NoVectors,
}

pub type Result<T> = std::result::Result<T, Error>;

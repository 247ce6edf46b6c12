use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("zero polynomial has no moment")]
    ZeroPolynomial,

    #[error("unsupported pole: {0}")]
    UnsupportedPole(String),

    #[error("improper fraction: numerator degree {num} >= denominator degree {den}")]
    ImproperFraction { num: usize, den: usize },

    #[error("series diverges: r = {r} (need r >= 2)")]
    SeriesDiverges { r: u32 },

    #[error("summand decays too slowly (decay degree {0}, need >= 2)")]
    SlowDecay(usize),

    #[error("increase K: K = {k} is below the monotonicity threshold {threshold}")]
    IncreaseK { k: u64, threshold: u64 },

    #[error("target error unreachable: needs K >= {k_estimate}, limit is {limit}")]
    TargetUnreachable { k_estimate: u64, limit: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors surfaced by the exact-arithmetic engine and the CLI harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("root must be nonzero")]
    ZeroRoot,
    #[error("constant coefficient a0 must be nonzero")]
    ZeroLeading,
    #[error("coefficient a_m must be nonzero")]
    ZeroAm,
    #[error("coefficient a_{{m-1}} must be nonzero")]
    ZeroAm1,
    #[error("coefficient a_1 must be nonzero")]
    ZeroA1,
    #[error("coefficient a_2 must be nonzero")]
    ZeroA2,
    #[error("coefficient a_d must be nonzero (degree collapses)")]
    ZeroAd,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("row and column sums disagree")]
    SumMismatch,
    #[error("Jacobian is numerically singular")]
    SingularJacobian,
    #[error("finite-difference step underflow")]
    SingularStep,
    #[error("sequence is not in B(k,r)")]
    NotInB,
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

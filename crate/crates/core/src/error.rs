use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degree of zero undefined")]
    DegreeOfZero,

    #[error("order too low for comparison")]
    OrderTooLow,

    #[error("diagram not adequate: {0}")]
    NotAdequate(String),

    #[error("resource budget exceeded: {0}")]
    Resource(String),

    #[error("coefficient overflow during evaluation")]
    Overflow,

    #[error("tail did not stabilize: {0}")]
    Unstable(String),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("unrealizable smoothing diagram: {0}")]
    Unrealizable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

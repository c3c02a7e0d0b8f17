use thiserror::Error;

/// Errors surfaced by the symbolic kernel and the verification pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("no image provided for variable `{0}`")]
    MissingImage(String),
    #[error("ring carries no multigrading")]
    UngradedRing,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("polynomial of degree > 1 is not a linear form")]
    NotLinear,
    #[error("decomposition search exceeded the round cap of {0}")]
    IterationCap(u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

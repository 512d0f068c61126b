use thiserror::Error;

/// Errors raised by validation, parsing and factorization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid Weil representation: {0}")]
    InvalidRep(String),
    #[error("invalid symmetric space: {0}")]
    InvalidSpace(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("repeated summand {0}; component group not modelled")]
    MultiplicityNotSupported(String),
    #[error("case {0} has a dedicated criterion")]
    WrongCase(u8),
    #[error("component group rank {0} exceeds the enumeration limit")]
    RankTooLarge(u32),
    #[error("several owners accept the same character: {0}")]
    MultipleOwners(String),
    #[error("irregular or nonintegral infinitesimal character: {0}")]
    Irregular(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group of order {order} exceeds the configured bound {bound}")]
    SizeBound { order: usize, bound: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid G-set: {0}")]
    InvalidGSet(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid functor datum: {0}")]
    InvalidFunctor(String),

    #[error("not a cofibration: {0}")]
    NotCofibration(String),

    #[error("apex is not a single orbit; decompose first")]
    NotAnOrbit,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

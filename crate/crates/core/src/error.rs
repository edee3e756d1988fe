use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("sigma is only defined for positive integers")]
    SigmaOfZero,
    #[error("index {index} exceeds cache capacity {max_n}")]
    OutOfCache { index: usize, max_n: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("floating-point overflow while converting {0}")]
    FloatOverflow(String),
    #[error("structural check failed: {0}")]
    Structure(String),
    #[error("comparison undecided at {bits} bits of precision")]
    Undecided { bits: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

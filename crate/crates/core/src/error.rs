use thiserror::Error;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("budget exceeded: {0}")]
    TooLarge(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("regime violation: {0}")]
    Regime(String),

    #[error("not found: {0}")]
    NotFound(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::error::Error::InvalidArgument(format!($($arg)*))
    };
}
pub(crate) use invalid;

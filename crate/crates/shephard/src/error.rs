use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element budget of {0} exceeded")]
    Budget(usize),
    #[error("integer coefficient overflow")]
    Overflow,
    #[error("loop reaches the edge of the tiling patch")]
    BallTooSmall,
    #[error("not applicable: {0}")]
    Inapplicable(String),
    #[error("numerical evaluation inconclusive: {0}")]
    Inconclusive(String),
}

impl Error {
    /// Process exit code for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidGraph(_) | Error::InvalidInput(_) => 2,
            Error::Budget(_) | Error::Overflow | Error::BallTooSmall | Error::Inconclusive(_) => 3,
            Error::Inapplicable(_) => 4,
            Error::DivisionByZero => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

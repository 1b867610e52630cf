use thiserror::Error;

/// Errors surfaced by loaders, graph construction and the layout optimizer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed input file (bad magic, unparsable line, wrong column count).
    #[error("format error: {0}")]
    Format(String),

    /// Inputs that parse but disagree with each other (count mismatches,
    /// duplicate entries, labels shorter than the matrix).
    #[error("inconsistent data: {0}")]
    Consistency(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Non-finite values where the pipeline requires finite ones.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

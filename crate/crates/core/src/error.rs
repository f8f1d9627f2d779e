use thiserror::Error;

/// Errors raised by constructors, searches and the file/DSL front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A table has the wrong shape or an entry outside `0..size`.
    #[error("malformed algebra: {0}")]
    Malformed(String),

    /// An operation was called on an algebra that does not meet its precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A configured size bound would be exceeded.
    #[error("size bound exceeded: {what} is {actual}, limit {limit}")]
    SizeBound {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    /// An algebra file does not conform to the JSON schema.
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    /// A set that should be a subuniverse is not closed; carries the offending operation.
    #[error("not closed under operations: {0}")]
    NotClosed(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

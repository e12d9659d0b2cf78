use thiserror::Error;

/// Errors raised by constructions, parsers and certification pipelines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid rotation system: {0}")]
    Witness(String),

    #[error("certification failed: {0}")]
    Certification(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("search refused: {0}")]
    SearchLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

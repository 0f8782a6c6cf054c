use thiserror::Error;

/// Errors produced by the summarization pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// No sentence survived segmentation.
    #[error("document contains no sentences")]
    EmptyDocument,

    /// An annotated document violates the input schema.
    #[error("invalid annotated document: {0}")]
    Schema(String),

    /// An explicit sentence index appears more than once.
    #[error("duplicate sentence index {0}")]
    DuplicateSentenceIndex(usize),

    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A required input is empty.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// JSON (de)serialization failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

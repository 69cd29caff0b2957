use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input (family expression, graph6, instance file).
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    /// Well-formed input that violates a domain constraint.
    #[error("validation error: {0}")]
    Validation(String),

    /// A configured size or search budget would be exceeded.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// Two knowledge-base rules disagree, or a verified claim was violated.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn validation(message: impl Into<String>) -> Self {
        Error::Validation(message.into())
    }

    pub(crate) fn limit(message: impl Into<String>) -> Self {
        Error::ResourceLimit(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the tracking stack.
#[derive(Debug, Error)]
pub enum SintError {
    /// Tensor or layer shape disagreement.
    #[error("shape mismatch in {context}: expected {expected}, got {got}")]
    ShapeMismatch {
        context: String,
        expected: String,
        got: String,
    },

    /// Invalid configuration value.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// A box lies fully outside the image or projects to an empty region.
    #[error("degenerate box: {0}")]
    DegenerateBox(String),

    /// Non-finite value detected where finite math is required.
    #[error("non-finite value in {0}")]
    NonFinite(String),

    /// Training or tracking preconditions violated.
    #[error("{0}")]
    Precondition(String),

    /// Malformed file contents (config, checkpoint, image, ground truth).
    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },

    /// Checkpoint magic string did not match.
    #[error("corrupt checkpoint {path}: bad magic")]
    BadMagic { path: String },

    /// Underlying I/O failure.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl SintError {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        SintError::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        SintError::Parse {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn shape(
        context: impl Into<String>,
        expected: impl std::fmt::Display,
        got: impl std::fmt::Display,
    ) -> Self {
        SintError::ShapeMismatch {
            context: context.into(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, SintError>;

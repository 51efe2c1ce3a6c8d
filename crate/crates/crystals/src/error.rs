use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A crystal index outside `1..=n`.
    #[error("index {i} out of range for rank {n}")]
    IndexOutOfRange { i: usize, n: usize },

    /// A malformed tableau, pattern or vector.
    #[error("invalid {kind}: {reason}")]
    Invalid { kind: &'static str, reason: String },

    /// Graph generation hit the node cap before exhausting the crystal.
    #[error("node cap of {cap} exceeded while generating a crystal graph")]
    NodeCapExceeded { cap: usize },

    /// An inverse map was applied to something outside its domain.
    #[error("{map} applied outside its domain: {reason}")]
    NotInDomain { map: &'static str, reason: String },

    /// Malformed JSON input.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn invalid(kind: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            kind,
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(map: &'static str, reason: impl Into<String>) -> Self {
        Error::NotInDomain {
            map,
            reason: reason.into(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

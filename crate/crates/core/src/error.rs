use std::fmt;

/// Errors produced anywhere in the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid input: {0}")]
    Input(String),

    /// Malformed graph6 text; `offset` is the byte position of the fault.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    /// Malformed line-oriented text (edge lists, traces, chain documents).
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A builder could not produce its object.
    #[error("construction failed: {0}")]
    Construction(String),

    /// A computed property check failed; `clause` names the check.
    #[error("verification failed ({clause}): {detail}")]
    Verification { clause: String, detail: String },

    /// An invariant that the engine guarantees was observed to be broken.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl fmt::Display) -> Self {
        Error::Input(msg.to_string())
    }

    pub(crate) fn parse(line: usize, msg: impl fmt::Display) -> Self {
        Error::Parse {
            line,
            message: msg.to_string(),
        }
    }

    pub(crate) fn verification(clause: impl fmt::Display, detail: impl fmt::Display) -> Self {
        Error::Verification {
            clause: clause.to_string(),
            detail: detail.to_string(),
        }
    }
}

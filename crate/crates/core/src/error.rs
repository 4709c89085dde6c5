use thiserror::Error;

/// Errors raised by the arithmetic, geometry and pairing layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by zero and similar arithmetic failures.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// Operands that do not live in the same structure (field, curve, group).
    #[error("structural error: {0}")]
    Structural(String),
    /// A mathematically meaningful input that falls outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A divisor class that is not m-torsion.
    #[error("torsion error: {0}")]
    Torsion(String),
    /// Malformed text input.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// Well-formed text describing an invalid object.
    #[error("invalid object: {0}")]
    Semantic(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn arithmetic(msg: impl Into<String>) -> Self {
        Error::Arithmetic(msg.into())
    }

    /// True for errors caused by malformed or invalid user text.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Semantic(_))
    }
}

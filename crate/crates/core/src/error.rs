//! Error taxonomy: user-correctable domain errors versus internal invariant
//! violations. The CLI maps the former to exit code 2 and the latter to
//! exit code 3, so the distinction is part of the public contract.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The caller handed us something outside an operation's domain
    /// (bad hypothesis parameters, non-monic input, zero where nonzero
    /// is required). Recoverable by fixing the input.
    #[error("invalid input: {0}")]
    Domain(String),

    /// An internal mathematical invariant failed. This is never the
    /// caller's fault: it signals a bug in this library or a falsified
    /// structural assumption, and must surface loudly rather than be
    /// swallowed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for returning `Error::Domain` with a formatted message.
macro_rules! domain {
    ($($arg:tt)*) => {
        return Err($crate::error::Error::Domain(format!($($arg)*)))
    };
}

/// Check an internal invariant, returning `Error::Invariant` on failure.
/// Used where a violation indicates a bug rather than bad input.
macro_rules! invariant {
    ($cond:expr, $($arg:tt)*) => {
        if !($cond) {
            return Err($crate::error::Error::Invariant(format!($($arg)*)));
        }
    };
}

pub(crate) use {domain, invariant};

//! Error types shared across the crate.

use std::fmt;

/// Errors from numerical evaluation and input validation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the supported domain of an operation.
    Domain(String),
    /// An evaluation failed to reach the requested accuracy; the message
    /// carries diagnostics (arguments, method, attained error).
    Eval(String),
    /// A root solver could not construct or shrink a bracket. This signals
    /// an internal inconsistency (the eigenvalue function is globally
    /// monotone per interval), not bad user input.
    Solver(String),
    /// Malformed user-supplied data (CSV grids, configuration values).
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Eval(msg) => write!(f, "evaluation error: {msg}"),
            Error::Solver(msg) => write!(f, "solver error: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub(crate) fn eval(msg: impl Into<String>) -> Self {
        Error::Eval(msg.into())
    }
    pub(crate) fn solver(msg: impl Into<String>) -> Self {
        Error::Solver(msg.into())
    }
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

use std::fmt;

/// Errors from the numerical evaluation routines.
#[derive(Debug, Clone, PartialEq)]
pub enum MathError {
    /// Input outside the routine's domain (argument range or precondition).
    Domain(String),
    /// A lower parameter sits on (or within 1e-12 of) a non-positive integer,
    /// where the series has a pole.
    Pole(String),
    /// A parameter value excluded by the formula itself (e.g. a = 0 where the
    /// closed form divides by a).
    Param(String),
}

impl fmt::Display for MathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MathError::Domain(msg) => write!(f, "domain error: {msg}"),
            MathError::Pole(msg) => write!(f, "pole error: {msg}"),
            MathError::Param(msg) => write!(f, "parameter error: {msg}"),
        }
    }
}

impl std::error::Error for MathError {}

pub type MathResult<T> = Result<T, MathError>;

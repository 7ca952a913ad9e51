use thiserror::Error;

/// Errors raised by the codecs, closed forms and oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The value has no representation within the allowed width.
    #[error("capacity error: shortest encoding needs {needed} bits, at most {max} allowed")]
    Capacity { needed: usize, max: usize },

    /// The value lies outside the dynamic range of the format.
    #[error("range error: {0}")]
    Range(String),

    /// A bit string does not match the width the format requires.
    #[error("format error: {0}")]
    Format(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    /// Exhaustive enumeration was asked to exceed its width budget.
    #[error("budget error: width {width} exceeds the enumeration budget of {max} bits")]
    Budget { width: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

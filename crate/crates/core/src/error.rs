use std::io;

use thiserror::Error;

/// Every failure the library can report.
///
/// The CLI maps `Usage` to exit status 2 and every other variant to 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precision exhausted: {0}")]
    Precision(String),
    #[error("pole: zeta has a simple pole at s = 1")]
    Pole,
    #[error("divergent series: {0}")]
    Divergence(String),
    #[error("malformed cache file: {0}")]
    Format(String),
    #[error("corrupt cache: {0}")]
    Corruption(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precision(msg: impl Into<String>) -> Self {
        Error::Precision(msg.into())
    }
}

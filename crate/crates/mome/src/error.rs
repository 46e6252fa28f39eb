//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MomeError {
    /// A tensor dimension does not satisfy an operation's requirements.
    /// The message names the offending axis.
    #[error("shape error: {0}")]
    Shape(String),

    /// A documented precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Invalid or inconsistent configuration.
    #[error("config error: {0}")]
    Config(String),

    /// A phantom could not be generated under the requested spec.
    #[error("generation error: {0}")]
    Generation(String),

    /// An on-disk artifact is malformed (bad magic, truncation, version).
    #[error("format error: {0}")]
    Format(String),

    /// Training produced a non-finite loss.
    #[error("training diverged: {0}")]
    Divergence(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, MomeError>;

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A partition string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Materializing all partitions of `n` would exceed the configured cap.
    #[error("cap exceeded for n={n}: p(n){} > cap {cap}",
            .count.map(|c| format!(" = {c}")).unwrap_or_default())]
    CapExceeded {
        n: u64,
        /// Exact partition count when it fits in 64 bits.
        count: Option<u64>,
        cap: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

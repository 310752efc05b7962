use thiserror::Error;

/// Errors raised by the combinatorial engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input lies outside the domain of an operation (e.g. a negative
    /// integer has no word over `{1}`, or a partition is crossing).
    #[error("domain error: {0}")]
    Domain(String),
    /// An absolute-order precondition `h <= g` was violated.
    #[error("order error: {0}")]
    Order(String),
    #[error("merge error: {0}")]
    Merge(String),
    /// An enumeration would exceed the configured size guard.
    #[error("size guard exceeded: {what} needs more than {limit} elements")]
    Resource { what: String, limit: usize },
    /// A distance query between points with no common closed simplex.
    #[error("metric scope error: {0}")]
    MetricScope(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An internal structural check failed.
    #[error("invariant violated: {0}")]
    Invariant(String),
    /// A configuration combines options that do not fit together.
    #[error("usage error: {0}")]
    Usage(String),
    #[error("unknown {kind} `{name}` (available: {available})")]
    UnknownName {
        kind: &'static str,
        name: String,
        available: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors produced by the matroid, Bergman and tree-space layers.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input text that could not be decoded (bad JSON, bad rational, wrong schema).
    #[error("malformed input: {0}")]
    Parse(String),
    /// A value that decodes fine but violates an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A dissimilarity map that fails the three-point condition.
    #[error("not an ultrametric: triple ({i}, {j}, {k}) has a unique maximum")]
    NotUltrametric { i: usize, j: usize, k: usize },
    /// An enumeration would exceed its configured budget.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    /// Two independent computations of the same object disagreed, or derived
    /// data contradicts itself.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

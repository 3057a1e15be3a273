//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong while building or querying the combinatorial
/// data attached to a set of Hodge numbers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    /// The caller supplied data that violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A root was used with a root system it does not belong to.
    #[error("{root} is not a root of {system}")]
    NotARoot { root: String, system: String },

    /// Two objects built from different descriptors were combined.
    #[error("objects come from different period domains: {0}")]
    DescriptorMismatch(String),

    /// An exhaustive search was asked to run beyond its size guard.
    #[error("too large for oracle: {what} has size {size}, guard is {guard}")]
    GuardExceeded {
        what: String,
        size: usize,
        guard: usize,
    },
}

impl HodgeError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        HodgeError::InvalidInput(msg.into())
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, HodgeError>;

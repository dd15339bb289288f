use alloc::string::String;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An input was checked and refused, e.g. a monomial outside a sector.
    #[error("rejected: {0}")]
    Rejected(String),
    /// A formal-mode search hit its bound without reaching a decision.
    #[error("undetermined: {0}")]
    Undetermined(String),
    #[error("too large: {0}")]
    TooLarge(String),
    /// Two independent computations disagreed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = core::result::Result<T, Error>;

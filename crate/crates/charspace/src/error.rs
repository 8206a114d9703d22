use thiserror::Error;

/// Errors surfaced by fallible operations.
///
/// Shape mismatches (ambient dimension, index range) are programmer errors
/// and panic instead; the variants here are conditions a caller can
/// legitimately trigger with valid code.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A block-size list was empty or contained a zero part.
    #[error("invalid block-size list: {0}")]
    InvalidSegre(String),

    /// An enumeration would exceed the caller-supplied budget.
    #[error("budget exceeded: need {needed} but budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    /// An orbit closure grew past its cap.
    #[error("orbit exceeds cap of {cap} vectors")]
    OrbitTooLarge { cap: usize },

    /// A constructive operation was called with parameters violating one of
    /// its inequality constraints; the message names the failed constraint.
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),

    /// A structural precondition of the operation does not hold for the
    /// given input; the message names the failed check.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// Complete classification is only available with at most two unrepeated
    /// elementary divisors.
    #[error("more than two unrepeated elementary divisors")]
    MoreThanTwoUnrepeated,

    /// A tuple was passed that does not belong to the lattice L(t).
    #[error("tuple {0} is not in the lattice for the given block sizes")]
    NotInLattice(String),

    /// Text failed to parse; `pos` is a byte offset into the input.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A parsed expression refers to a block or power that does not exist
    /// in the target module.
    #[error("semantic error: {0}")]
    Semantic(String),
}

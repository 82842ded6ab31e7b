use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("not invertible: {0}")]
    NotInvertible(String),

    /// A construction needs an admissible A3-associative input; carries the failing check.
    #[error("admissible A3-associative algebra required ({0})")]
    AdmissibilityRequired(Box<CheckReport>),

    #[error("tensor or form is not skew-symmetric")]
    NotSkew,

    #[error("tensor is not a solution of the A3-associative Yang-Baxter equation ({0})")]
    NotYangBaxterSolution(Box<CheckReport>),

    /// A precondition expressed as a check did not hold.
    #[error("precondition failed: {0}")]
    Precondition(Box<CheckReport>),

    #[error("representation belongs to a different algebra")]
    MismatchedAlgebra,

    #[error(
        "spans are not complementary: rank {rank} of {total} stacked vectors in dimension {dim}"
    )]
    NotComplementary {
        rank: usize,
        total: usize,
        dim: usize,
    },

    #[error("search space too large: {candidates} candidates (limit {limit})")]
    SearchSpaceTooLarge { candidates: u128, limit: u128 },

    #[error("rejection budget of {0} attempts exceeded")]
    RejectionBudgetExceeded(usize),

    #[error("missing input: {0}")]
    MissingInput(&'static str),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

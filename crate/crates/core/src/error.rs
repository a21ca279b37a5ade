use alloc::vec::Vec;

use thiserror::Error;

use crate::index_set::IndexSet;

/// Failures raised by the exact computations in this crate.
///
/// Several variants can only fire if a divisibility or integrality theorem
/// is false for the inputs at hand; they are reported instead of rounded away.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(i64),
    #[error("no interpolation points given")]
    NoPoints,
    #[error("psi recursion for {set} is not divisible by {divisor}")]
    NonIntegerPsi { set: IndexSet, divisor: usize },
    #[error("psi is not defined for the pair ({0}, {1})")]
    UndefinedExtension(i64, i64),
    #[error("index set elements must be strictly increasing: {0:?}")]
    NotStrictlyIncreasing(Vec<u32>),
    #[error("operation requires a non-empty index set")]
    EmptyIndexSet,
    #[error("interpolated polynomial for {set} disagrees with the definition at n = {at}")]
    DegreeBoundViolated { set: IndexSet, at: u32 },
    #[error("closed forms exist only for one or two indices, got {0}")]
    UnsupportedSize(usize),
    #[error("degree must be at least 1")]
    ZeroDegree,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

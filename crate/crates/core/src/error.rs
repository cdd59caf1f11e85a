use thiserror::Error;

use crate::scalar::Ring;

/// Errors raised by the toolkit. Domain errors (a matrix that is not
/// invertible, two permutations that are not comparable, ...) are kept apart
/// from input errors so front ends can map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is not a unit in {ring}")]
    NotAUnit { value: String, ring: Ring },

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: Ring, right: Ring },

    #[error("{0} is not a field")]
    NotAField(Ring),

    /// `index` is the first (1-based) diagonal position or pivot column that
    /// fails, when one is known.
    #[error("matrix is not invertible{}", index.map(|i| format!(" (first failure at index {i})")).unwrap_or_default())]
    NotInvertible { index: Option<usize> },

    #[error("matrix is not upper triangular: nonzero entry at ({row}, {col})")]
    NotTriangular { row: usize, col: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("comparison is undecidable without a verification bound: {0}")]
    UndecidableWithoutBound(String),

    #[error("permutations are equal")]
    EqualPermutations,

    #[error("invalid position pair ({p}, {q}): need 1 <= p < q")]
    InvalidPair { p: usize, q: usize },

    #[error("permutations are not comparable as required: {0}")]
    NotComparable(String),

    #[error("positions ({p}, {q}) are not a descent: tau(p) = {tau_p} <= tau(q) = {tau_q}")]
    NotADescent {
        p: usize,
        q: usize,
        tau_p: usize,
        tau_q: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("enumeration too large: {0}")]
    TooLarge(String),

    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Two independent computations of the same quantity disagreed. Never
    /// expected; seeing it means a bug.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

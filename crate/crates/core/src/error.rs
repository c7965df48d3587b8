//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,

    #[error("generator {value} is not a positive integer")]
    InvalidGenerator { value: i64 },

    #[error("generators have gcd {gcd}, expected 1")]
    GcdNotOne { gcd: i64 },

    #[error("{value} is not an element of the semigroup")]
    NotMember { value: i64 },

    #[error("more than {cap} factorizations of {element}")]
    FactorizationOverflow { element: i64, cap: usize },

    #[error("RF-matrix count for f = {f} exceeds cap {cap} (per-row factorization counts {row_counts:?})")]
    RfEnumerationOverflow {
        f: i64,
        row_counts: Vec<usize>,
        cap: usize,
    },

    #[error("precondition failed: {reason}")]
    PrecondFailed { reason: String },

    #[error("semigroup is not pseudo-symmetric")]
    NotPseudoSymmetric,

    #[error("no relabeling brings RF(F/2) to the canonical form (falsification!)")]
    NoCanonicalForm,

    #[error("binomial is not in the toric ideal: {reason}")]
    NotInIdeal { reason: String },

    #[error("binomial reduces to zero")]
    ZeroBinomial,

    #[error("invalid family parameters: {reason}")]
    InvalidParams { reason: String },

    #[error("no RF-matrix with a single positive entry per row")]
    PatternNotFound,
}

impl Error {
    pub(crate) fn precond(reason: impl Into<String>) -> Self {
        Error::PrecondFailed {
            reason: reason.into(),
        }
    }
}

//! Exact-arithmetic toolkit for numerical semigroups.
//!
//! The crate computes the invariants attached to a numerical semigroup
//! `H = <n_1, ..., n_e>`: Apery sets, gaps, the Frobenius number,
//! pseudo-Frobenius numbers and the symmetry classification
//! ([`semigroup`]), factorizations and the minimal-multiple table alpha
//! ([`factorization`]), row-factorization matrices and the binomial
//! relations they produce ([`rf`]), minimal generating sets of the toric
//! ideal `I_H` together with graded Betti numbers ([`betti`]), verifiers
//! for the 4-generator structure theorems ([`structure`]) and shifted
//! families `H + m` ([`shifted`]).
//!
//! All arithmetic is exact 64-bit integer arithmetic; enumerations that
//! could blow up (factorization sets, RF-matrix products) are capped and
//! fail loudly instead of sampling.

pub mod betti;
pub mod error;
pub mod factorization;
pub mod report;
pub mod rf;
pub mod semigroup;
pub mod shifted;
pub mod structure;

pub use error::{Error, Result};
pub use semigroup::{AperyTable, Classification, NumericalSemigroup, PFData};

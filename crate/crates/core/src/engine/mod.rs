//! Generating series, trace values and Schur ranks computed from a
//! [`SheafDescriptor`](crate::sheaf::SheafDescriptor).
//!
//! Every quantity has a closed-form route and at least one independent
//! route (direct powers, the Adams exponential, the `S_t` product); the
//! [`verify`] module checks them against each other.

mod convolution;
mod symmetric;
mod trace;
pub mod verify;

pub use convolution::{f_polynomials, r_bullet_direct, r_direct, r_star_direct, z_series, Numerators, SeriesKind};
pub use symmetric::{ftilde_polynomials, sym_rank_series_adams, sym_rank_series_betti};
pub use trace::{schur_rank, schur_table, trace_values, SchurRow, TraceValues};

use thiserror::Error;

use crate::algebra::{AlgebraError, Rational};
use crate::symgroup::SymGroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("chi = {0} must be a non-negative integer here")]
    NonIntegerChi(Rational),
    #[error("{what} = {value} is not an integer")]
    NonIntegral { what: String, value: Rational },
    #[error("routes disagree for {what} at index {index}: {left} vs {right}")]
    RouteMismatch { what: &'static str, index: usize, left: Rational, right: Rational },
    #[error("cycle type must be nonempty")]
    EmptyPartition,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    SymGroup(#[from] SymGroupError),
}

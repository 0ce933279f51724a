//! Exact arithmetic substrate: rationals, dense univariate polynomials,
//! symmetric Laurent polynomials, s-truncated bivariate polynomials and
//! rational generating series with a single pole.

mod bivar;
mod laurent;
mod poly;
mod rational;
mod series;

pub use bivar::BivarTrunc;
pub use laurent::SymLaurent;
pub use poly::{poly_arith, Degree, PolyOp, UniPoly, Var};
pub use rational::{
    binomial, factorial, gen_binomial, parse_rational, rat, ParseRationalError, Rational,
};
pub use series::RationalSeries;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: Var, right: Var },
    #[error("truncation order mismatch: s^{left} vs s^{right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series argument has a nonzero constant term in s")]
    NotNilpotent,
    #[error("pole order must be at least 1")]
    ZeroPoleOrder,
}

//! Exact rational scalars, sparse multivariate polynomials over ℚ, dense
//! univariate polynomials, and the text grammar used for polynomial input.

mod monomial;
mod multipoly;
mod parse;
mod rational;
mod unipoly;

pub use monomial::{monomials_of_degree, Monomial};
pub use multipoly::{Homogeneity, MultiPoly};
pub use parse::{default_variables, parse_poly, ParseError};
pub use rational::{
    parse_rational, rat, ratio, serialize_rational_rows, serialize_rationals, Rational,
    RationalParseError,
};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
}

//! Exact scalars and sparse multivariate polynomials.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod scalar;

pub use monomial::{Exponents, Monomial};
pub use order::MonomialOrder;
pub use polynomial::{PolyRing, Polynomial, Term};
pub use scalar::{Field, Scalar, DEFAULT_PRIME};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("term does not divide the polynomial")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("cannot parse `{input}`: {message}")]
    Parse { input: String, message: String },
}

//! Sparse multivariate polynomial arithmetic over exact rationals.
//!
//! Coefficients are `num_rational::BigRational` (always in lowest terms,
//! positive denominator), monomials are exponent vectors over a shared
//! [`Ring`], and polynomials keep their terms sorted descending under the
//! ring's default degree-reverse-lexicographic order. Floating point enters
//! only at evaluation time.

mod order;
mod parse;
mod polynomial;
mod ring;

pub use order::TermOrder;
pub use polynomial::{Monomial, Polynomial};
pub use ring::Ring;

use thiserror::Error;

/// Errors from polynomial construction, parsing, and evaluation.
#[derive(Debug, Error)]
pub enum PolyError {
    #[error("ring mismatch: left ring [{left}] vs right ring [{right}]")]
    RingMismatch { left: String, right: String },
    #[error("syntax error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("point has {got} coordinates but the ring has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range for ring of arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("invalid variable name `{0}`: must match [A-Za-z][A-Za-z0-9_]*")]
    InvalidName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("monomial exponent overflow")]
    ExponentOverflow,
}

pub type Result<T> = std::result::Result<T, PolyError>;

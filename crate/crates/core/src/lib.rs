//! Workbench for algebraic exponential families.
//!
//! The crate is organized around an exact symbolic half and a numeric half:
//!
//! * [`poly`] — sparse multivariate polynomials over arbitrary-precision
//!   rationals, term orders, parsing and formatting.
//! * [`ideal`] — Groebner bases (Buchberger) and the geometry operations
//!   built on them: normal forms, membership, elimination, saturation,
//!   dimension, solution counting, Jacobians, minors, singular loci,
//!   tangent planes, implicitization.
//! * [`models`] — translation of conditional-independence and parametric
//!   statistical models (Gaussian and discrete) into ideals of model
//!   invariants, marginalization, and the rank-3 nonnegative factorization
//!   evidence check.
//! * [`mle`] — Gaussian likelihoods, the closed-form likelihood-ratio
//!   statistic for the joint marginal/conditional independence model,
//!   polynomial likelihood equations, and the one-factor analysis case
//!   study with boundary (Heywood) handling.
//! * [`asym`] — Monte Carlo machinery for limiting distributions of
//!   likelihood-ratio statistics at singular and smooth model points.

pub mod asym;
pub mod ideal;
pub mod mle;
pub mod models;
pub mod poly;
pub mod ratmat;

//! Exact arithmetic: rationals, integer exponent data and Laurent polynomials.

pub mod laurent;
pub mod lattice;
pub mod rational;

pub use laurent::{toric_jacobian, LaurentPolynomial, Monomial};
pub use lattice::{determinant, ExponentMatrix, ExponentVector};
pub use rational::Rational;

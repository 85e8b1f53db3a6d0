//! Exact scalars, exponent vectors, monomial orders and canonical
//! multivariate polynomials.

mod context;
mod monomial;
mod order;
mod polynomial;
mod scalar;

pub use context::VarContext;
pub use monomial::ExponentVector;
pub use order::{compare, MonomialOrder};
pub use polynomial::{Polynomial, Term};
pub use scalar::{Field, Scalar};

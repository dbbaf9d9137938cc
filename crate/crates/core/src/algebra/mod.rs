//! Sparse multivariate polynomials in the four variables `a, b, c, d`.

mod monomial;
mod polynomial;

pub use monomial::{Monomial, Var};
pub use polynomial::Polynomial;

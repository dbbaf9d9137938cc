//! Exact linearization of cyclically shifted cosine power sums and symbolic
//! verification of Ramanujan-type power-sum identities.
//!
//! The numeric core is generic over [`Scalar`] (polynomials, Fourier
//! expansions) or [`num_traits::Float`] (polar forms); the aliases below fix
//! the concrete types used by the symbolic pipeline and the CLI.

pub mod algebra;
pub mod cli;
pub mod discovery;
pub mod dsl;
pub mod fourier;
pub mod identity;
pub mod polar;
pub mod scalar;

pub use algebra::{Monomial, Var};
pub use discovery::{derive_constant, discover, emit_statement, DiscoveredIdentity, DiscoveryQuery};
pub use fourier::{linearize_closed, linearize_oracle, HarmonicMode};
pub use identity::{catalog, spot_check, verify, BracketKind, Expr, IdentityStatement};
pub use scalar::Scalar;

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// Polynomial over exact rationals.
pub type RationalPolynomial = algebra::Polynomial<Rational>;

/// Exact Fourier expansion.
pub type Expansion = fourier::FourierExpansion<Rational>;

pub type Triple64 = polar::ZeroSumTriple<f64>;
pub type Polar64 = polar::PolarForm<f64>;

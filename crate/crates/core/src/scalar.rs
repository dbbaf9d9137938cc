//! Scalar abstraction shared by the polynomial, Fourier and polar modules.
//!
//! Symbolic work runs over [`BigRational`]; `f64`/`f32` instantiations exist
//! for quick numeric cross-checks.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// A commutative field-like scalar usable as a polynomial or Fourier
/// coefficient.
pub trait Scalar: Clone + Debug + Display + PartialEq + Signed + Send + Sync + 'static {
    /// Builds `numer / denom`. `denom` must be nonzero.
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self;

    fn from_integer(value: i64) -> Self {
        Self::from_ratio(&BigInt::from(value), &BigInt::from(1))
    }

    /// Nearest `f64`; lossy for exact scalars.
    fn to_f64_lossy(&self) -> f64;
}

impl Scalar for BigRational {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        BigRational::new(numer.clone(), denom.clone())
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        let n = numer.to_f64().unwrap_or(f64::NAN);
        let d = denom.to_f64().unwrap_or(f64::NAN);
        n / d
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        <f64 as Scalar>::from_ratio(numer, denom) as f32
    }

    fn to_f64_lossy(&self) -> f64 {
        *self as f64
    }
}

/// Parses `"p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

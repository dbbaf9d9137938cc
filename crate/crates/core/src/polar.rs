//! Polar form of zero-sum triples.
//!
//! Every real triple with `x + y + z = 0` can be written as
//! `ρ (cos θ, cos(θ - 2π/3), cos(θ + 2π/3))` with `ρ ≥ 0`. The radius is
//! `ρ = sqrt(2/3 · (x² + y² + z²))` and depends only on the pair-product sum
//! `xy + xz + yz = -3ρ²/4`, so two triples with equal pair-product sums share
//! their radius.

use num_traits::{Float, FloatConst};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PolarError {
    #[error("components do not sum to zero (residual {residual:e})")]
    NotZeroSum { residual: f64 },
    #[error("radius must be finite and non-negative, got {0}")]
    InvalidRadius(f64),
    #[error("non-finite component")]
    NonFinite,
}

/// A real triple summing to zero, within `1e-9 · (1 + |x| + |y| + |z|)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZeroSumTriple<F> {
    pub x: F,
    pub y: F,
    pub z: F,
}

impl<F: Float> ZeroSumTriple<F> {
    pub fn new(x: F, y: F, z: F) -> Result<Self, PolarError> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(PolarError::NonFinite);
        }
        let residual = (x + y + z).abs();
        let bound = tolerance::<F>() * (F::one() + x.abs() + y.abs() + z.abs());
        if residual > bound {
            return Err(PolarError::NotZeroSum {
                residual: residual.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(ZeroSumTriple { x, y, z })
    }

    /// Completes `(x, y)` with `z = -(x + y)`.
    pub fn from_pair(x: F, y: F) -> Self {
        ZeroSumTriple { x, y, z: -(x + y) }
    }

    pub fn components(&self) -> [F; 3] {
        [self.x, self.y, self.z]
    }

    /// `(y, z, x)`
    pub fn rotated(&self) -> Self {
        ZeroSumTriple {
            x: self.y,
            y: self.z,
            z: self.x,
        }
    }

    pub fn scaled(&self, factor: F) -> Self {
        ZeroSumTriple {
            x: self.x * factor,
            y: self.y * factor,
            z: self.z * factor,
        }
    }
}

/// `(ρ, θ)` with `ρ ≥ 0` and `θ ∈ (-π, π]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarForm<F> {
    rho: F,
    theta: F,
}

impl<F: Float + FloatConst> PolarForm<F> {
    /// Wraps `theta` into `(-π, π]`.
    pub fn new(rho: F, theta: F) -> Result<Self, PolarError> {
        if !rho.is_finite() || rho < F::zero() {
            return Err(PolarError::InvalidRadius(rho.to_f64().unwrap_or(f64::NAN)));
        }
        if !theta.is_finite() {
            return Err(PolarError::NonFinite);
        }
        Ok(PolarForm {
            rho,
            theta: wrap_angle(theta),
        })
    }

    pub fn rho(&self) -> F {
        self.rho
    }

    pub fn theta(&self) -> F {
        self.theta
    }
}

fn tolerance<F: Float>() -> F {
    F::from(1e-9).unwrap()
}

/// Maps an angle into `(-π, π]`.
pub fn wrap_angle<F: Float + FloatConst>(theta: F) -> F {
    let two_pi = F::TAU();
    let mut t = theta % two_pi;
    if t > F::PI() {
        t = t - two_pi;
    } else if t <= -F::PI() {
        t = t + two_pi;
    }
    t
}

/// Polar decomposition of a zero-sum triple.
///
/// With `X = x + y/2`, `Y = (√3/2) y` one has `X² + Y² = (x² + y² + z²)/2`;
/// `θ = atan2(Y, X) + π/6`. The zero triple maps to `(0, 0)`.
pub fn decompose<F: Float + FloatConst>(t: &ZeroSumTriple<F>) -> PolarForm<F> {
    let ZeroSumTriple { x, y, z } = *t;
    if x.is_zero() && y.is_zero() && z.is_zero() {
        return PolarForm {
            rho: F::zero(),
            theta: F::zero(),
        };
    }
    let two = F::one() + F::one();
    let three = two + F::one();
    let big_x = x + y / two;
    let big_y = three.sqrt() / two * y;
    let alpha = big_y.atan2(big_x);
    let rho = (two / three * (x * x + y * y + z * z)).sqrt();
    PolarForm {
        rho,
        theta: wrap_angle(alpha + F::FRAC_PI_6()),
    }
}

/// `ρ (cos θ, cos(θ - 2π/3), cos(θ + 2π/3))`.
pub fn compose<F: Float + FloatConst>(p: &PolarForm<F>) -> ZeroSumTriple<F> {
    let third = F::TAU() / F::from(3).unwrap();
    ZeroSumTriple {
        x: p.rho * p.theta.cos(),
        y: p.rho * (p.theta - third).cos(),
        z: p.rho * (p.theta + third).cos(),
    }
}

/// `xy + xz + yz`, which equals `-(3/4) ρ²` on zero-sum triples.
pub fn pair_product_sum<F: Float>(t: &ZeroSumTriple<F>) -> F {
    t.x * t.y + t.x * t.z + t.y * t.z
}

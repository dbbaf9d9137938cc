//! Exact Fourier expansions of shifted cosine power sums
//!
//! ```text
//! f_n(θ) = Σ_{k=0}^{N-1} cos^n(θ + 2kπ/N)
//! ```
//!
//! Only harmonics that are multiples of `N` survive the sum over shifts. Two
//! independent routes compute the surviving coefficients: [`linearize_closed`]
//! evaluates the binomial closed form directly, [`linearize_oracle`] expands
//! `cos^n` through `(e^{iθ} + e^{-iθ})^n / 2^n` using a Pascal row and filters.
//!
//! Coefficients are those of the full sum `f_n`, not of the average `f_n / N`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::scalar::Scalar;

/// Which part of an expansion must reduce to a single cosine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HarmonicMode {
    /// The constant term is ignored (it cancels in `f(θ1) - f(θ2)`).
    Difference,
    /// The constant term must be absent as well.
    Pointwise,
}

/// Harmonic → coefficient mapping of `f_n` at shift count `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierExpansion<T> {
    shift_count: u32,
    power: u32,
    coefficients: BTreeMap<u32, T>,
}

impl<T: Scalar> FourierExpansion<T> {
    fn from_map(shift_count: u32, power: u32, raw: BTreeMap<u32, T>) -> Self {
        let coefficients = raw.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        FourierExpansion {
            shift_count,
            power,
            coefficients,
        }
    }

    pub fn shift_count(&self) -> u32 {
        self.shift_count
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn coefficient(&self, harmonic: u32) -> Option<&T> {
        self.coefficients.get(&harmonic)
    }

    /// `(harmonic, coefficient)` pairs in ascending harmonic order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &T)> {
        self.coefficients.iter().map(|(h, c)| (*h, c))
    }

    /// True when `f_n` vanishes identically.
    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Sum of all coefficients, i.e. the expansion at θ = 0.
    pub fn value_at_zero(&self) -> T {
        self.coefficients
            .values()
            .fold(T::zero(), |acc, c| acc + c.clone())
    }

    pub fn eval(&self, theta: f64) -> f64 {
        self.coefficients
            .iter()
            .map(|(h, c)| c.to_f64_lossy() * (*h as f64 * theta).cos())
            .sum()
    }

    /// Returns the lone nonconstant harmonic and its amplitude, if there is
    /// exactly one (and, in pointwise mode, no constant term).
    pub fn single_harmonic(&self, mode: HarmonicMode) -> Option<(u32, T)> {
        if mode == HarmonicMode::Pointwise && self.coefficients.contains_key(&0) {
            return None;
        }
        let mut nonconstant = self.coefficients.iter().filter(|(h, _)| **h > 0);
        let (h, c) = nonconstant.next()?;
        if nonconstant.next().is_some() {
            return None;
        }
        Some((*h, c.clone()))
    }

    /// `f_6 = 15/16 + 3/32 cos(6θ)`.
    pub fn render_plain(&self) -> String {
        let mut out = format!("f_{} = ", self.power);
        if self.is_zero() {
            out.push('0');
            return out;
        }
        for (i, (h, c)) in self.coefficients.iter().enumerate() {
            if i > 0 {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                out.push('-');
            }
            let magnitude = c.abs();
            match *h {
                0 => write!(out, "{magnitude}").unwrap(),
                _ => {
                    if !magnitude.is_one() {
                        write!(out, "{magnitude} ").unwrap();
                    }
                    if *h == 1 {
                        out.push_str("cos(θ)");
                    } else {
                        write!(out, "cos({h}θ)").unwrap();
                    }
                }
            }
        }
        out
    }

    pub fn render_latex(&self) -> String {
        let mut out = format!("f_{{{}}}(\\theta) = ", self.power);
        if self.is_zero() {
            out.push('0');
            return out;
        }
        for (i, (h, c)) in self.coefficients.iter().enumerate() {
            if i > 0 {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                out.push('-');
            }
            let magnitude = latex_scalar(&c.abs());
            match *h {
                0 => out.push_str(&magnitude),
                1 => write!(out, "{magnitude}\\cos(\\theta)").unwrap(),
                _ => write!(out, "{magnitude}\\cos({h}\\theta)").unwrap(),
            }
        }
        out
    }

    /// `{"N":3,"n":6,"terms":[{"harmonic":0,"coeff":"15/16"},...]}`
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Term {
            harmonic: u32,
            coeff: String,
        }
        #[derive(Serialize)]
        struct Doc {
            #[serde(rename = "N")]
            shift_count: u32,
            n: u32,
            terms: Vec<Term>,
        }
        let doc = Doc {
            shift_count: self.shift_count,
            n: self.power,
            terms: self
                .coefficients
                .iter()
                .map(|(h, c)| Term {
                    harmonic: *h,
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("expansion serializes")
    }
}

fn latex_scalar<T: Scalar>(value: &T) -> String {
    let text = value.to_string();
    match text.split_once('/') {
        Some((n, d)) => format!("\\frac{{{n}}}{{{d}}}"),
        None if value.is_one() => String::new(),
        None => text,
    }
}

/// Closed-form linearization.
///
/// For `n = 2p` the averaged coefficient of `cos(2mθ)` is
/// `C(2p, p+m) / 2^(2p-1)` (`m > 0`) or `C(2p, p) / 2^(2p)` (`m = 0`); for
/// `n = 2p+1` the coefficient of `cos((2m+1)θ)` is `C(2p+1, p-m) / 2^(2p)`.
/// Each surviving harmonic is then scaled by `N`.
///
/// # Panics
///
/// If `shift_count` is zero.
pub fn linearize_closed<T: Scalar>(shift_count: u32, power: u32) -> FourierExpansion<T> {
    assert!(shift_count > 0, "shift count must be positive");
    let p = power / 2;
    let n_big = BigInt::from(shift_count);
    let mut coefficients = BTreeMap::new();
    for m in 0..=p {
        let (harmonic, numer, denom_exp) = if power % 2 == 0 {
            if m == 0 {
                (0, binomial(2 * p, p), 2 * p)
            } else {
                (2 * m, binomial(2 * p, p + m), 2 * p - 1)
            }
        } else {
            (2 * m + 1, binomial(2 * p + 1, p - m), 2 * p)
        };
        if harmonic % shift_count != 0 {
            continue;
        }
        let denom = BigInt::one() << denom_exp;
        coefficients.insert(harmonic, T::from_ratio(&(numer * &n_big), &denom));
    }
    FourierExpansion::from_map(shift_count, power, coefficients)
}

/// Linearization by direct expansion of `(e^{iθ} + e^{-iθ})^n` and
/// filtering of the exponents divisible by `N`; shares no coefficient
/// formula with [`linearize_closed`].
///
/// # Panics
///
/// If `shift_count` is zero.
pub fn linearize_oracle<T: Scalar>(shift_count: u32, power: u32) -> FourierExpansion<T> {
    assert!(shift_count > 0, "shift count must be positive");
    let row = pascal_row(power);
    let n = power as i64;
    // exponent → integer weight; e^{ijθ} + e^{-ijθ} = 2 cos(jθ)
    let mut weights: BTreeMap<u32, BigInt> = BTreeMap::new();
    for (k, binom) in row.iter().enumerate() {
        let exponent = n - 2 * k as i64;
        if exponent.rem_euclid(shift_count as i64) != 0 {
            continue;
        }
        // the sum over shifts of e^{i e (θ + 2πj/N)} contributes N e^{i e θ}
        *weights.entry(exponent.unsigned_abs() as u32).or_default() += binom;
    }
    let denom = BigInt::one() << power;
    let n_big = BigInt::from(shift_count);
    let coefficients = weights
        .into_iter()
        .map(|(h, w)| (h, T::from_ratio(&(w * &n_big), &denom)))
        .collect();
    FourierExpansion::from_map(shift_count, power, coefficients)
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn pascal_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for pair in row.windows(2) {
            next.push(&pair[0] + &pair[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

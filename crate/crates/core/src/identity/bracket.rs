use num_traits::{One, Zero};

use super::BracketKind;
use crate::algebra::{Monomial, Polynomial, Var};
use crate::scalar::Scalar;
use crate::Rational;

/// The two zero-sum triples of linear forms in `a, b, c, d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triple {
    /// `(b + c + d, -a - b - c, a - d)`
    First,
    /// `(a + c + d, -a - b - d, b - c)`
    Second,
}

impl Triple {
    /// Coefficients of each linear form over `(a, b, c, d)`.
    pub fn linear_forms(self) -> [[i64; 4]; 3] {
        match self {
            Triple::First => [[0, 1, 1, 1], [-1, -1, -1, 0], [1, 0, 0, -1]],
            Triple::Second => [[1, 0, 1, 1], [-1, -1, 0, -1], [0, 1, -1, 0]],
        }
    }
}

fn linear_poly<T: Scalar>(coeffs: &[i64; 4]) -> Polynomial<T> {
    Polynomial::from_terms(
        Var::ALL
            .iter()
            .zip(coeffs)
            .map(|(v, c)| (Monomial::var(*v), T::from_integer(*c))),
    )
}

pub fn triple_polys<T: Scalar>(triple: Triple) -> [Polynomial<T>; 3] {
    triple.linear_forms().map(|f| linear_poly(&f))
}

fn power_sum<T: Scalar>(triple: Triple, n: u32) -> Polynomial<T> {
    triple_polys::<T>(triple)
        .iter()
        .fold(Polynomial::zero(), |acc, form| &acc + &form.pow(n))
}

/// Expanded `D(n)`, `A(n)` or `B(n)`; homogeneous of degree `n`.
pub fn bracket_poly<T: Scalar>(kind: BracketKind, n: u32) -> Polynomial<T> {
    match kind {
        BracketKind::First => power_sum(Triple::First, n),
        BracketKind::Second => power_sum(Triple::Second, n),
        BracketKind::Difference => &power_sum(Triple::First, n) - &power_sum(Triple::Second, n),
    }
}

fn eval_power_sum(triple: Triple, n: u32, point: &[Rational; 4]) -> Rational {
    let mut total = Rational::zero();
    for form in triple.linear_forms() {
        let value: Rational = form
            .iter()
            .zip(point)
            .map(|(c, x)| x * Rational::from_integer((*c).into()))
            .sum();
        let mut acc = Rational::one();
        for _ in 0..n {
            acc *= &value;
        }
        total += acc;
    }
    total
}

pub(crate) fn eval_bracket(kind: BracketKind, n: u32, point: &[Rational; 4]) -> Rational {
    match kind {
        BracketKind::First => eval_power_sum(Triple::First, n, point),
        BracketKind::Second => eval_power_sum(Triple::Second, n, point),
        BracketKind::Difference => {
            eval_power_sum(Triple::First, n, point) - eval_power_sum(Triple::Second, n, point)
        }
    }
}

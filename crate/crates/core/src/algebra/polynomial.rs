use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, Var};
use crate::scalar::Scalar;

/// Sparse polynomial in `a, b, c, d` with coefficients in `T`.
///
/// Terms are kept in canonical form: no zero coefficients, keyed by
/// [`Monomial`] in graded-lex order. Structural equality is therefore
/// polynomial equality.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Default for Polynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(value: T) -> Self {
        Self::term(Monomial::ONE, value)
    }

    pub fn var(var: Var) -> Self {
        Self::term(Monomial::var(var), T::one())
    }

    pub fn term(monomial: Monomial, coeff: T) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        Polynomial { terms }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, monomial: Monomial, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&monomial) {
            Some(existing) => {
                *existing = existing.clone() + coeff;
                if existing.is_zero() {
                    self.terms.remove(&monomial);
                }
            }
            None => {
                self.terms.insert(monomial, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, monomial: &Monomial) -> Option<&T> {
        self.terms.get(monomial)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    pub fn degree_in(&self, var: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn scale(&self, factor: &T) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * factor.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, point: &[T; 4]) -> T {
        self.terms
            .iter()
            .fold(T::zero(), |acc, (m, c)| acc + c.clone() * m.eval(point))
    }

    /// Replaces `var` by `numer / denom` and multiplies through by
    /// `denom^k`, `k` being the degree of `self` in `var`, so the result
    /// stays polynomial.
    ///
    /// # Panics
    ///
    /// If `numer` or `denom` involves `var`.
    pub fn substitute_clear(&self, var: Var, numer: &Self, denom: &Self) -> Self {
        assert!(
            numer.degree_in(var) == 0 && denom.degree_in(var) == 0,
            "substitution for {var} must not involve {var}"
        );
        let k = self.degree_in(var);
        if k == 0 {
            return self.clone();
        }
        let numer_powers = powers(numer, k);
        let denom_powers = powers(denom, k);

        // group by power of `var`
        let mut by_power: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_power
                .entry(m.exponent(var))
                .or_insert_with(Self::zero)
                .add_term(m.without(var), c.clone());
        }

        let mut out = Self::zero();
        for (j, rest) in by_power {
            let factor = &numer_powers[j as usize] * &denom_powers[(k - j) as usize];
            let product = &rest * &factor;
            for (m, c) in product.terms {
                out.add_term(m, c);
            }
        }
        out
    }
}

fn powers<T: Scalar>(p: &Polynomial<T>, k: u32) -> Vec<Polynomial<T>> {
    let mut out = Vec::with_capacity(k as usize + 1);
    out.push(Polynomial::one());
    for i in 1..=k as usize {
        let next = &out[i - 1] * p;
        out.push(next);
    }
    out
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $method(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    /// Graded-lex order, e.g. `6*b*c - 6*a*d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

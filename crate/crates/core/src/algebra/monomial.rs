use std::cmp::Ordering;
use std::fmt;

use crate::scalar::Scalar;

/// One of the four polynomial variables, in their fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    B,
    C,
    D,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::A, Var::B, Var::C, Var::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        ['a', 'b', 'c', 'd'][self.index()]
    }

    pub fn from_symbol(symbol: char) -> Option<Var> {
        match symbol {
            'a' => Some(Var::A),
            'b' => Some(Var::B),
            'c' => Some(Var::C),
            'd' => Some(Var::D),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Exponent vector over `(a, b, c, d)`.
///
/// Ordered graded-lexicographically: lower total degree first, ties broken by
/// comparing the exponent tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn new(exponents: [u32; 4]) -> Self {
        Monomial(exponents)
    }

    pub fn var(var: Var) -> Self {
        let mut e = [0; 4];
        e[var.index()] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; 4] {
        self.0
    }

    pub fn exponent(&self, var: Var) -> u32 {
        self.0[var.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn without(&self, var: Var) -> Monomial {
        let mut e = self.0;
        e[var.index()] = 0;
        Monomial(e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x += y;
        }
        Monomial(e)
    }

    pub fn eval<T: Scalar>(&self, point: &[T; 4]) -> T {
        let mut acc = T::one();
        for (value, &e) in point.iter().zip(self.0.iter()) {
            for _ in 0..e {
                acc = acc * value.clone();
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `a^2*b*d`; the empty monomial renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for var in Var::ALL {
            let e = self.exponent(var);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{e}")?;
            }
        }
        Ok(())
    }
}

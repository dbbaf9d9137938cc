//! Identity statements over the parameterized power-sum brackets, their
//! symbolic verification modulo `ad = bc`, and the built-in catalog.

mod bracket;
mod catalog;
mod verify;

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::algebra::{Polynomial, Var};
use crate::scalar::Scalar;
use crate::Rational;

pub use bracket::{bracket_poly, triple_polys, Triple};
pub use catalog::{catalog, catalog_entries, lookup, CatalogEntry};
pub use verify::{reduce, spot_check, verify, Verdict, VerificationReport};

/// The three bracket families.
///
/// `A(n)` and `B(n)` are the `n`-th power sums of the first and second
/// parameterized triples; `D(n) = A(n) - B(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketKind {
    /// `D`
    Difference,
    /// `A`
    First,
    /// `B`
    Second,
}

impl BracketKind {
    pub const ALL: [BracketKind; 3] = [
        BracketKind::Difference,
        BracketKind::First,
        BracketKind::Second,
    ];

    pub fn symbol(self) -> char {
        match self {
            BracketKind::Difference => 'D',
            BracketKind::First => 'A',
            BracketKind::Second => 'B',
        }
    }

    pub fn from_symbol(symbol: char) -> Option<Self> {
        match symbol {
            'D' => Some(BracketKind::Difference),
            'A' => Some(BracketKind::First),
            'B' => Some(BracketKind::Second),
            _ => None,
        }
    }
}

/// Expression tree of one side of an identity.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Rational(Rational),
    Var(Var),
    Bracket(BracketKind, u32),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn int(value: i64) -> Expr {
        Expr::Rational(Rational::from_integer(value.into()))
    }

    pub fn var(var: Var) -> Expr {
        Expr::Var(var)
    }

    pub fn bracket(kind: BracketKind, n: u32) -> Expr {
        Expr::Bracket(kind, n)
    }

    pub fn pow(self, exponent: u32) -> Expr {
        Expr::Pow(Box::new(self), exponent)
    }

    /// Fully expanded polynomial.
    pub fn expand<T: Scalar>(&self) -> Polynomial<T> {
        match self {
            Expr::Rational(r) => Polynomial::constant(T::from_ratio(r.numer(), r.denom())),
            Expr::Var(v) => Polynomial::var(*v),
            Expr::Bracket(kind, n) => bracket_poly(*kind, *n),
            Expr::Add(l, r) => &l.expand::<T>() + &r.expand::<T>(),
            Expr::Sub(l, r) => &l.expand::<T>() - &r.expand::<T>(),
            Expr::Mul(l, r) => &l.expand::<T>() * &r.expand::<T>(),
            Expr::Pow(base, e) => base.expand::<T>().pow(*e),
        }
    }

    /// Exact value at `(a, b, c, d)`, computed from the tree without
    /// expanding to a polynomial.
    pub fn evaluate(&self, point: &[Rational; 4]) -> Rational {
        match self {
            Expr::Rational(r) => r.clone(),
            Expr::Var(v) => point[v.index()].clone(),
            Expr::Bracket(kind, n) => bracket::eval_bracket(*kind, *n, point),
            Expr::Add(l, r) => l.evaluate(point) + r.evaluate(point),
            Expr::Sub(l, r) => l.evaluate(point) - r.evaluate(point),
            Expr::Mul(l, r) => l.evaluate(point) * r.evaluate(point),
            Expr::Pow(base, e) => {
                let b = base.evaluate(point);
                let mut acc = Rational::one();
                for _ in 0..*e {
                    acc *= &b;
                }
                acc
            }
        }
    }

    /// Node count.
    pub fn size(&self) -> usize {
        match self {
            Expr::Rational(_) | Expr::Var(_) | Expr::Bracket(..) => 1,
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) => 1 + l.size() + r.size(),
            Expr::Pow(b, _) => 1 + b.size(),
        }
    }

    pub fn is_zero_literal(&self) -> bool {
        matches!(self, Expr::Rational(r) if r.is_zero())
    }
}

impl Add for Expr {
    type Output = Expr;

    fn add(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
}

impl Sub for Expr {
    type Output = Expr;

    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl Mul for Expr {
    type Output = Expr;

    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

/// `lhs == rhs`, optionally under the constraint `ad - bc = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityStatement {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub constrained: bool,
}

impl IdentityStatement {
    pub fn new(name: impl Into<String>, lhs: Expr, rhs: Expr, constrained: bool) -> Self {
        IdentityStatement {
            name: name.into(),
            lhs,
            rhs,
            constrained,
        }
    }

    /// Same identity, ignoring the name.
    pub fn same_identity(&self, other: &IdentityStatement) -> bool {
        self.lhs == other.lhs && self.rhs == other.rhs && self.constrained == other.constrained
    }
}

impl fmt::Display for IdentityStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::dsl::render(self, crate::dsl::Format::Plain))
    }
}

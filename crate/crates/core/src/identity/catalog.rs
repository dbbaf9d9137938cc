use super::{BracketKind, Expr, IdentityStatement};
use crate::algebra::Var;

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub statement: IdentityStatement,
    pub description: &'static str,
}

fn d(n: u32) -> Expr {
    Expr::bracket(BracketKind::Difference, n)
}

fn a_bracket(n: u32) -> Expr {
    Expr::bracket(BracketKind::First, n)
}

fn var(v: Var) -> Expr {
    Expr::var(v)
}

/// `x^2 + x*y + y^2`
fn quadratic_form(x: Var, y: Var) -> Expr {
    var(x).pow(2) + var(x) * var(y) + var(y).pow(2)
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            statement: IdentityStatement::new(
                "ramanujan-6-10-8",
                Expr::int(64) * d(6) * d(10),
                Expr::int(45) * d(8).pow(2),
                true,
            ),
            description: "64 D(6) D(10) = 45 D(8)^2 on ad = bc",
        },
        CatalogEntry {
            statement: IdentityStatement::new(
                "gen-3-7-5-six",
                Expr::int(25) * d(3) * d(7),
                Expr::int(21) * d(5).pow(2),
                true,
            ),
            description: "25 D(3) D(7) = 21 D(5)^2 on ad = bc, six-term odd brackets",
        },
        CatalogEntry {
            statement: IdentityStatement::new(
                "gen-3-7-5-three",
                Expr::int(25) * a_bracket(3) * a_bracket(7),
                Expr::int(21) * a_bracket(5).pow(2),
                false,
            ),
            description: "25 A(3) A(7) = 21 A(5)^2 for all a, b, c, d",
        },
        CatalogEntry {
            statement: IdentityStatement::new(
                "asym-6-8-factored",
                Expr::int(8) * quadratic_form(Var::A, Var::B) * quadratic_form(Var::A, Var::C) * d(6),
                Expr::int(3) * var(Var::A).pow(2) * d(8),
                true,
            ),
            description: "8 (a^2+ab+b^2)(a^2+ac+c^2) D(6) = 3 a^2 D(8) on ad = bc",
        },
        CatalogEntry {
            statement: IdentityStatement::new(
                "asym-6-8-r2",
                Expr::int(4) * a_bracket(2) * d(6),
                Expr::int(3) * d(8),
                true,
            ),
            description: "4 A(2) D(6) = 3 D(8) on ad = bc",
        },
    ]
}

pub fn catalog() -> Vec<IdentityStatement> {
    catalog_entries().into_iter().map(|e| e.statement).collect()
}

pub fn lookup(name: &str) -> Option<IdentityStatement> {
    catalog().into_iter().find(|s| s.name == name)
}

use serde::Serialize;

use crate::identity::{BracketKind, Expr, IdentityStatement, Triple};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// Re-parseable DSL text.
    Plain,
    /// Brackets expanded into explicit power sums.
    Latex,
    /// AST serialization.
    Json,
}

pub fn render(stmt: &IdentityStatement, format: Format) -> String {
    match format {
        Format::Plain => {
            let body = format!("{} == {}", render_expr(&stmt.lhs), render_expr(&stmt.rhs));
            if stmt.constrained {
                format!("constraint: a*d - b*c = 0; {body}")
            } else {
                body
            }
        }
        Format::Latex => {
            let body = format!("{} = {}", latex(&stmt.lhs, Level::Sum), latex(&stmt.rhs, Level::Sum));
            if stmt.constrained {
                format!("ad=bc:\\quad {body}")
            } else {
                body
            }
        }
        Format::Json => {
            let doc = JsonStatement {
                name: &stmt.name,
                constraint: stmt.constrained.then_some("a*d - b*c = 0"),
                lhs: JsonExpr::from(&stmt.lhs),
                rhs: JsonExpr::from(&stmt.rhs),
            };
            serde_json::to_string(&doc).expect("statement serializes")
        }
    }
}

/// Binding strength of a node, loosest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Sum,
    Product,
    Power,
    Atom,
}

fn level(e: &Expr) -> Level {
    match e {
        Expr::Add(..) | Expr::Sub(..) => Level::Sum,
        Expr::Mul(..) => Level::Product,
        Expr::Pow(..) => Level::Power,
        Expr::Rational(r) if !r.is_integer() || r < &Rational::from_integer(0.into()) => {
            // safe as a factor, but bracketed as a power base
            Level::Power
        }
        _ => Level::Atom,
    }
}

/// DSL text with the minimum parentheses needed to re-parse to `e`.
pub fn render_expr(e: &Expr) -> String {
    plain(e, Level::Sum)
}

fn plain(e: &Expr, min: Level) -> String {
    let text = match e {
        Expr::Rational(r) => r.to_string(),
        Expr::Var(v) => v.to_string(),
        Expr::Bracket(kind, n) => format!("{}({n})", kind.symbol()),
        Expr::Add(l, r) => format!("{} + {}", plain(l, Level::Sum), plain(r, Level::Product)),
        Expr::Sub(l, r) => format!("{} - {}", plain(l, Level::Sum), plain(r, Level::Product)),
        Expr::Mul(l, r) => format!("{}*{}", plain(l, Level::Product), plain(r, Level::Power)),
        Expr::Pow(b, n) => format!("{}^{n}", plain(b, Level::Atom)),
    };
    if level(e) < min && !is_signed_factor(e, min) {
        format!("({text})")
    } else {
        text
    }
}

/// Fractions and negative literals only need parentheses as power bases.
fn is_signed_factor(e: &Expr, min: Level) -> bool {
    matches!(e, Expr::Rational(_)) && min < Level::Atom
}

fn latex(e: &Expr, min: Level) -> String {
    let text = match e {
        Expr::Rational(r) => latex_rational(r),
        Expr::Var(v) => v.to_string(),
        Expr::Bracket(kind, n) => format!("\\left\\{{ {} \\right\\}}", latex_bracket(*kind, *n)),
        Expr::Add(l, r) => format!("{} + {}", latex(l, Level::Sum), latex(r, Level::Product)),
        Expr::Sub(l, r) => format!("{} - {}", latex(l, Level::Sum), latex(r, Level::Product)),
        Expr::Mul(l, r) => {
            let left = latex(l, Level::Product);
            let right = latex(r, Level::Power);
            let numeric_start = right.starts_with(|c: char| c.is_ascii_digit() || c == '-')
                || right.starts_with("\\frac");
            if numeric_start {
                format!("{left} \\cdot {right}")
            } else {
                format!("{left}{right}")
            }
        }
        Expr::Pow(b, n) => format!("{}^{{{n}}}", latex(b, Level::Atom)),
    };
    if level(e) < min && !is_signed_factor(e, min) {
        format!("\\left({text}\\right)")
    } else {
        text
    }
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_string();
    }
    let sign = if r.numer() < &0.into() { "-" } else { "" };
    let magnitude = r.numer().magnitude();
    format!("{sign}\\frac{{{magnitude}}}{{{}}}", r.denom())
}

/// Signed linear forms of a triple, written with a leading positive term.
fn signed_forms(triple: Triple) -> [(bool, &'static str); 3] {
    match triple {
        Triple::First => [(true, "b+c+d"), (false, "a+b+c"), (true, "a-d")],
        Triple::Second => [(true, "a+c+d"), (false, "a+b+d"), (true, "b-c")],
    }
}

/// `(b+c+d)^{n}-(a+b+c)^{n}+...`
fn latex_bracket(kind: BracketKind, n: u32) -> String {
    // (form is positive, belongs to the subtracted B half)
    let terms: Vec<(bool, &str, bool)> = match kind {
        BracketKind::First => signed_forms(Triple::First).map(|(s, f)| (s, f, false)).to_vec(),
        BracketKind::Second => signed_forms(Triple::Second).map(|(s, f)| (s, f, false)).to_vec(),
        BracketKind::Difference => signed_forms(Triple::First)
            .map(|(s, f)| (s, f, false))
            .into_iter()
            .chain(signed_forms(Triple::Second).map(|(s, f)| (s, f, true)))
            .collect(),
    };
    let mut out = String::new();
    for (i, (positive_form, form, subtracted)) in terms.into_iter().enumerate() {
        let positive = (positive_form || n % 2 == 0) != subtracted;
        match (i, positive) {
            (0, true) => {}
            (_, true) => out.push('+'),
            (_, false) => out.push('-'),
        }
        out.push_str(&format!("({form})^{{{n}}}"));
    }
    out
}

#[derive(Serialize)]
struct JsonStatement<'a> {
    name: &'a str,
    constraint: Option<&'static str>,
    lhs: JsonExpr,
    rhs: JsonExpr,
}

#[derive(Serialize)]
#[serde(tag = "node", rename_all = "lowercase")]
enum JsonExpr {
    Rational { value: String },
    Var { name: String },
    Bracket { family: String, n: u32 },
    Add { lhs: Box<JsonExpr>, rhs: Box<JsonExpr> },
    Sub { lhs: Box<JsonExpr>, rhs: Box<JsonExpr> },
    Mul { lhs: Box<JsonExpr>, rhs: Box<JsonExpr> },
    Pow { base: Box<JsonExpr>, exponent: u32 },
}

impl From<&Expr> for JsonExpr {
    fn from(e: &Expr) -> Self {
        let pair = |l: &Expr, r: &Expr| (Box::new(JsonExpr::from(l)), Box::new(JsonExpr::from(r)));
        match e {
            Expr::Rational(r) => JsonExpr::Rational {
                value: r.to_string(),
            },
            Expr::Var(v) => JsonExpr::Var {
                name: v.to_string(),
            },
            Expr::Bracket(kind, n) => JsonExpr::Bracket {
                family: kind.symbol().to_string(),
                n: *n,
            },
            Expr::Add(l, r) => {
                let (lhs, rhs) = pair(l, r);
                JsonExpr::Add { lhs, rhs }
            }
            Expr::Sub(l, r) => {
                let (lhs, rhs) = pair(l, r);
                JsonExpr::Sub { lhs, rhs }
            }
            Expr::Mul(l, r) => {
                let (lhs, rhs) = pair(l, r);
                JsonExpr::Mul { lhs, rhs }
            }
            Expr::Pow(b, n) => JsonExpr::Pow {
                base: Box::new(JsonExpr::from(b.as_ref())),
                exponent: *n,
            },
        }
    }
}

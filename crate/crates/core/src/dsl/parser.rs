use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::lexer::{tokenize, Position, Token, TokenKind};
use crate::algebra::{Polynomial, Var};
use crate::identity::{BracketKind, Expr, IdentityStatement};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {pos}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        pos: Position,
        expected: Vec<String>,
        found: String,
    },
    #[error("unsupported constraint at {pos}: only `a*d - b*c = 0` is accepted")]
    UnsupportedConstraint { pos: Position },
    #[error("negative exponent at {pos}")]
    NegativeExponent { pos: Position },
    #[error("zero denominator at {pos}")]
    ZeroDenominator { pos: Position },
    #[error("number `{text}` at {pos} is too large")]
    NumberTooLarge { pos: Position, text: String },
}

impl ParseError {
    pub fn position(&self) -> Position {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::UnsupportedConstraint { pos }
            | ParseError::NegativeExponent { pos }
            | ParseError::ZeroDenominator { pos }
            | ParseError::NumberTooLarge { pos, .. } => *pos,
        }
    }
}

/// Parses an unnamed statement.
pub fn parse(src: &str) -> Result<IdentityStatement, ParseError> {
    parse_named("", src)
}

pub fn parse_named(name: &str, src: &str) -> Result<IdentityStatement, ParseError> {
    let tokens = tokenize(src).map_err(|e| ParseError::Syntax {
        pos: e.pos,
        expected: vec!["a token".into()],
        found: format!("`{}`", e.found),
    })?;
    let mut parser = Parser { tokens, index: 0 };
    let (constrained, lhs, rhs) = parser.statement()?;
    Ok(IdentityStatement::new(name, lhs, rhs, constrained))
}

const BASE_START: &[&str] = &["number", "variable a-d", "bracket D/A/B", "`(`", "`-`"];

struct Parser {
    tokens: Vec<Token>,
    index: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.index]
    }

    fn advance(&mut self) -> Token {
        let tok = self.tokens[self.index].clone();
        if tok.kind != TokenKind::Eof {
            self.index += 1;
        }
        tok
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let tok = self.peek();
        // a dangling operator is reported at the operator itself
        let pos = if tok.kind == TokenKind::Eof && self.index > 0 {
            self.tokens[self.index - 1].pos
        } else {
            tok.pos
        };
        ParseError::Syntax {
            pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.kind.to_string(),
        }
    }

    fn expect(&mut self, kind: TokenKind, label: &str) -> Result<Token, ParseError> {
        if self.peek().kind == kind {
            Ok(self.advance())
        } else {
            Err(self.error(&[label]))
        }
    }

    fn statement(&mut self) -> Result<(bool, Expr, Expr), ParseError> {
        let constrained = matches!(&self.peek().kind, TokenKind::Word(w) if w == "constraint");
        if constrained {
            self.constraint()?;
            self.expect(TokenKind::Semicolon, "`;`")?;
        }
        let lhs = self.expr()?;
        if self.peek().kind != TokenKind::Equals {
            return Err(self.error(&["`==`", "`+`", "`-`", "`*`"]));
        }
        self.advance();
        let rhs = self.expr()?;
        if self.peek().kind != TokenKind::Eof {
            return Err(self.error(&["end of input", "`+`", "`-`", "`*`"]));
        }
        Ok((constrained, lhs, rhs))
    }

    fn constraint(&mut self) -> Result<(), ParseError> {
        self.advance();
        self.expect(TokenKind::Colon, "`:`")?;
        let pos = self.peek().pos;
        let lhs = self.expr()?;
        self.expect(TokenKind::Assign, "`=`")?;
        let rhs = self.expr()?;
        let relation = &lhs.expand::<Rational>() - &rhs.expand::<Rational>();
        if is_ratio_constraint(&relation) {
            Ok(())
        } else {
            Err(ParseError::UnsupportedConstraint { pos })
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().kind {
                TokenKind::Plus => {
                    self.advance();
                    acc = acc + self.term()?;
                }
                TokenKind::Minus => {
                    self.advance();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().kind == TokenKind::Star {
            self.advance();
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if self.peek().kind != TokenKind::Caret {
            return Ok(base);
        }
        self.advance();
        let exponent = self.small_nat()?;
        Ok(base.pow(exponent))
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let tok = self.peek().clone();
        match &tok.kind {
            TokenKind::Nat(_) => self.rational(false),
            TokenKind::Minus => {
                self.advance();
                if !matches!(self.peek().kind, TokenKind::Nat(_)) {
                    return Err(self.error(&["number"]));
                }
                self.rational(true)
            }
            TokenKind::LParen => {
                self.advance();
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(inner)
            }
            TokenKind::Word(word) => {
                let mut chars = word.chars();
                let single = match (chars.next(), chars.next()) {
                    (Some(c), None) => Some(c),
                    _ => None,
                };
                if let Some(var) = single.and_then(Var::from_symbol) {
                    self.advance();
                    return Ok(Expr::var(var));
                }
                if let Some(kind) = single.and_then(BracketKind::from_symbol) {
                    self.advance();
                    self.expect(TokenKind::LParen, "`(`")?;
                    let n = self.small_nat()?;
                    self.expect(TokenKind::RParen, "`)`")?;
                    return Ok(Expr::bracket(kind, n));
                }
                Err(self.error(BASE_START))
            }
            _ => Err(self.error(BASE_START)),
        }
    }

    fn rational(&mut self, negative: bool) -> Result<Expr, ParseError> {
        let numer_tok = self.advance();
        let TokenKind::Nat(text) = &numer_tok.kind else {
            unreachable!("caller checked for a number");
        };
        let mut numer: BigInt = text.parse().expect("lexer yields digits");
        if negative {
            numer = -numer;
        }
        let mut denom = BigInt::from(1);
        if self.peek().kind == TokenKind::Slash {
            self.advance();
            let tok = self.peek().clone();
            let TokenKind::Nat(text) = &tok.kind else {
                return Err(self.error(&["number"]));
            };
            self.advance();
            denom = text.parse().expect("lexer yields digits");
            if denom.is_zero() {
                return Err(ParseError::ZeroDenominator { pos: tok.pos });
            }
        }
        Ok(Expr::Rational(Rational::new(numer, denom)))
    }

    fn small_nat(&mut self) -> Result<u32, ParseError> {
        let tok = self.peek().clone();
        match &tok.kind {
            TokenKind::Nat(text) => {
                self.advance();
                text.parse().map_err(|_| ParseError::NumberTooLarge {
                    pos: tok.pos,
                    text: text.clone(),
                })
            }
            TokenKind::Minus => Err(ParseError::NegativeExponent { pos: tok.pos }),
            _ => Err(self.error(&["non-negative integer"])),
        }
    }
}

/// True when `relation` is a nonzero multiple of `ad - bc`.
fn is_ratio_constraint(relation: &Polynomial<Rational>) -> bool {
    let ad_bc = &(&Polynomial::var(Var::A) * &Polynomial::var(Var::D))
        - &(&Polynomial::var(Var::B) * &Polynomial::var(Var::C));
    let Some((monomial, coeff)) = relation.terms().next() else {
        return false;
    };
    let Some(reference) = ad_bc.coeff(monomial) else {
        return false;
    };
    let factor = coeff / reference;
    *relation == ad_bc.scale(&factor)
}

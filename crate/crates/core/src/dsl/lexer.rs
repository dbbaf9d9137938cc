use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Nat(String),
    Word(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Colon,
    Semicolon,
    Assign,
    Equals,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Nat(n) => write!(f, "number `{n}`"),
            TokenKind::Word(w) => write!(f, "`{w}`"),
            TokenKind::Plus => f.write_str("`+`"),
            TokenKind::Minus => f.write_str("`-`"),
            TokenKind::Star => f.write_str("`*`"),
            TokenKind::Slash => f.write_str("`/`"),
            TokenKind::Caret => f.write_str("`^`"),
            TokenKind::LParen => f.write_str("`(`"),
            TokenKind::RParen => f.write_str("`)`"),
            TokenKind::Colon => f.write_str("`:`"),
            TokenKind::Semicolon => f.write_str("`;`"),
            TokenKind::Assign => f.write_str("`=`"),
            TokenKind::Equals => f.write_str("`==`"),
            TokenKind::Eof => f.write_str("end of input"),
        }
    }
}

/// Byte offset plus 1-based line and column (in characters).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Position {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub pos: Position,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct LexError {
    pub pos: Position,
    pub found: char,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, LexError> {
    let mut tokens = Vec::new();
    let mut chars = src.char_indices().peekable();
    let (mut line, mut column) = (1, 1);

    while let Some(&(offset, ch)) = chars.peek() {
        let pos = Position {
            offset,
            line,
            column,
        };
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if ch == '#' {
            while let Some(&(_, c)) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
            }
            continue;
        }
        if ch.is_ascii_digit() || ch.is_ascii_alphabetic() {
            let digits = ch.is_ascii_digit();
            let mut text = String::new();
            while let Some(&(_, c)) = chars.peek() {
                let same_class = if digits {
                    c.is_ascii_digit()
                } else {
                    c.is_ascii_alphabetic() || c == '_'
                };
                if !same_class {
                    break;
                }
                text.push(c);
                chars.next();
                column += 1;
            }
            let kind = if digits {
                TokenKind::Nat(text)
            } else {
                TokenKind::Word(text)
            };
            tokens.push(Token { kind, pos });
            continue;
        }
        chars.next();
        column += 1;
        let kind = match ch {
            '+' => TokenKind::Plus,
            '-' | '−' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '/' => TokenKind::Slash,
            '^' => TokenKind::Caret,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            ':' => TokenKind::Colon,
            ';' => TokenKind::Semicolon,
            '=' => {
                if matches!(chars.peek(), Some(&(_, '='))) {
                    chars.next();
                    column += 1;
                    TokenKind::Equals
                } else {
                    TokenKind::Assign
                }
            }
            other => return Err(LexError { pos, found: other }),
        };
        tokens.push(Token { kind, pos });
    }

    tokens.push(Token {
        kind: TokenKind::Eof,
        pos: Position {
            offset: src.len(),
            line,
            column,
        },
    });
    Ok(tokens)
}

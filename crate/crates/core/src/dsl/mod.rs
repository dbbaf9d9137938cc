//! Text format for identity statements.
//!
//! ```text
//! stmt       := [constraint ";"] expr "==" expr
//! constraint := "constraint" ":" "a" "*" "d" "-" "b" "*" "c" "=" "0"
//! expr       := term { ("+" | "-") term }
//! term       := factor { "*" factor }
//! factor     := base [ "^" nat ]
//! base       := rational | var | bracket | "(" expr ")"
//! bracket    := ("D" | "A" | "B") "(" nat ")"
//! var        := "a" | "b" | "c" | "d"
//! rational   := ["-"] nat ["/" nat]
//! ```
//!
//! `#` starts a comment running to the end of the line. Identity files use
//! the `.rid` extension and hold one statement each.

mod lexer;
mod parser;
mod render;

pub use parser::{parse, parse_named, ParseError};
pub use render::{render, render_expr, Format};

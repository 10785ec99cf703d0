//! Textual syntax for scalars.
//!
//! Grammar (documented in the repository README):
//!
//! ```text
//! scalar   := expr [ '@root' INT ]
//! expr     := term { ('+' | '-') term }
//! term     := unary { ['*' | '/'] unary }     (juxtaposition multiplies)
//! unary    := '-' unary | postfix
//! postfix  := atom [ '^' ['-'] INT ]
//! atom     := INT | 'q' | '[' ['-'] INT ']' | '(' expr ')'
//! ```
//!
//! `[n]` is the q-integer. In root-of-unity mode values are reduced modulo
//! the cyclotomic polynomial as they are built; an `@root p'` suffix, when
//! present, must match the active mode.

use std::fmt;

use num::BigRational;
use thiserror::Error;

use super::{FieldMode, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    pub msg: String,
    pub pos: usize,
}

impl ParseError {
    pub(crate) fn new(msg: impl Into<String>, pos: usize) -> Self {
        ParseError {
            msg: msg.into(),
            pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    At,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) => write!(f, "{}", s),
            Tok::Ident(s) => write!(f, "{}", s),
            Tok::Plus => write!(f, "+"),
            Tok::Minus => write!(f, "-"),
            Tok::Star => write!(f, "*"),
            Tok::Slash => write!(f, "/"),
            Tok::Caret => write!(f, "^"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::LBracket => write!(f, "["),
            Tok::RBracket => write!(f, "]"),
            Tok::At => write!(f, "@"),
        }
    }
}

pub(crate) fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            '[' => {
                out.push((Tok::LBracket, i));
                i += 1;
            }
            ']' => {
                out.push((Tok::RBracket, i));
                i += 1;
            }
            '@' => {
                out.push((Tok::At, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].to_string()), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'')
                {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
            }
            other => {
                return Err(ParseError::new(format!("unexpected character '{}'", other), i));
            }
        }
    }
    Ok(out)
}

pub(crate) struct Cursor {
    toks: Vec<(Tok, usize)>,
    pub(crate) idx: usize,
    end: usize,
}

impl Cursor {
    pub(crate) fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Cursor {
            toks: lex(text)?,
            idx: 0,
            end: text.len(),
        })
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    pub(crate) fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(_, p)| *p)
    }

    pub(crate) fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &Tok) -> Result<(), ParseError> {
        let pos = self.pos();
        if self.eat(tok) {
            Ok(())
        } else {
            Err(ParseError::new(format!("expected '{}'", tok), pos))
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.idx >= self.toks.len()
    }

    /// A signed integer literal: `['-'] INT`, converted to i64.
    pub(crate) fn signed_int(&mut self) -> Result<i64, ParseError> {
        let pos = self.pos();
        let neg = self.eat(&Tok::Minus);
        match self.next() {
            Some(Tok::Int(s)) => {
                let v: i64 = s
                    .parse()
                    .map_err(|_| ParseError::new("integer literal out of range", pos))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(ParseError::new("expected an integer", pos)),
        }
    }
}

/// Parse a scalar in the active field mode.
pub fn parse_scalar(text: &str, mode: FieldMode) -> Result<Scalar, ParseError> {
    let mut cur = Cursor::new(text)?;
    let value = parse_expr(&mut cur, mode)?;
    if cur.eat(&Tok::At) {
        let pos = cur.pos();
        match cur.next() {
            Some(Tok::Ident(w)) if w == "root" => {}
            _ => return Err(ParseError::new("expected 'root' after '@'", pos)),
        }
        let order = cur.signed_int()?;
        if mode.p_prime() != Some(order as u32) {
            return Err(ParseError::new(
                format!("@root {} does not match mode {}", order, mode),
                pos,
            ));
        }
    }
    if !cur.at_end() {
        return Err(ParseError::new("trailing input", cur.pos()));
    }
    Ok(value)
}

pub(crate) fn parse_expr(cur: &mut Cursor, mode: FieldMode) -> Result<Scalar, ParseError> {
    let mut acc = parse_term(cur, mode)?;
    loop {
        if cur.eat(&Tok::Plus) {
            acc = &acc + &parse_term(cur, mode)?;
        } else if cur.eat(&Tok::Minus) {
            acc = &acc - &parse_term(cur, mode)?;
        } else {
            return Ok(acc);
        }
    }
}

fn starts_factor(tok: &Tok) -> bool {
    matches!(
        tok,
        Tok::Int(_) | Tok::LParen | Tok::LBracket | Tok::Ident(_)
    )
}

fn parse_term(cur: &mut Cursor, mode: FieldMode) -> Result<Scalar, ParseError> {
    let mut acc = parse_unary(cur, mode)?;
    loop {
        if cur.eat(&Tok::Star) {
            acc = &acc * &parse_unary(cur, mode)?;
        } else if cur.eat(&Tok::Slash) {
            let pos = cur.pos();
            let d = parse_unary(cur, mode)?;
            let inv = d
                .invert()
                .map_err(|e| ParseError::new(e.to_string(), pos))?;
            acc = &acc * &inv;
        } else if cur.peek().map_or(false, starts_factor) {
            acc = &acc * &parse_unary(cur, mode)?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_unary(cur: &mut Cursor, mode: FieldMode) -> Result<Scalar, ParseError> {
    if cur.eat(&Tok::Minus) {
        return Ok(-&parse_unary(cur, mode)?);
    }
    parse_postfix(cur, mode)
}

fn parse_postfix(cur: &mut Cursor, mode: FieldMode) -> Result<Scalar, ParseError> {
    let base = parse_atom(cur, mode)?;
    if cur.eat(&Tok::Caret) {
        let pos = cur.pos();
        let e = cur.signed_int()?;
        return base
            .pow(e)
            .map_err(|err| ParseError::new(err.to_string(), pos));
    }
    Ok(base)
}

/// A single scalar atom, shared with the element parser.
pub(crate) fn parse_scalar_atom(cur: &mut Cursor, mode: FieldMode) -> Result<Scalar, ParseError> {
    parse_atom(cur, mode)
}

fn parse_atom(cur: &mut Cursor, mode: FieldMode) -> Result<Scalar, ParseError> {
    let pos = cur.pos();
    match cur.next() {
        Some(Tok::Int(s)) => {
            let n: BigRational = s
                .parse::<num::BigInt>()
                .map(BigRational::from_integer)
                .map_err(|_| ParseError::new("bad integer literal", pos))?;
            Ok(mode.rational(n))
        }
        Some(Tok::Ident(w)) if w == "q" => Ok(mode.q()),
        Some(Tok::LBracket) => {
            let n = cur.signed_int()?;
            cur.expect(&Tok::RBracket)?;
            Ok(mode.q_integer(n))
        }
        Some(Tok::LParen) => {
            let inner = parse_expr(cur, mode)?;
            cur.expect(&Tok::RParen)?;
            Ok(inner)
        }
        Some(t) => Err(ParseError::new(
            format!("unexpected token '{}' in scalar expression", t),
            pos,
        )),
        None => Err(ParseError::new("unexpected end of input", pos)),
    }
}

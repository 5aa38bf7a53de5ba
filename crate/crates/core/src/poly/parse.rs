//! Polynomial expressions:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' nat)?
//! base   := rational | var | '(' expr ')'
//! ```
//!
//! `rational` is `p` or `p/q` written without spaces, `var` is `x1 .. xn`.
//! Implicit multiplication is rejected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy)]
pub struct ParseOptions {
    pub nvars: usize,
    pub max_exponent: u32,
}

impl ParseOptions {
    pub fn new(nvars: usize) -> Self {
        ParseOptions { nvars, max_exponent: 10_000 }
    }
}

pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial, ParseError> {
    parse_polynomial_with(text, ParseOptions::new(nvars))
}

pub fn parse_polynomial_with(text: &str, opts: ParseOptions) -> Result<Polynomial, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0, opts, end: text.len() };
    let out = p.expr()?;
    match p.peek() {
        None => Ok(out),
        Some((at, tok)) => Err(err(at, format!("unexpected {tok} (implicit multiplication is not allowed)"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Rat(BigInt, BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Rat(p, q) => write!(f, "rational {p}/{q}"),
            Tok::Var(i) => write!(f, "variable x{i}"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
        }
    }
}

fn err(position: usize, message: impl Into<String>) -> ParseError {
    ParseError { position, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let j = digits(i);
                let num: BigInt = text[i..j].parse().unwrap();
                if j < bytes.len() && bytes[j] == b'/' {
                    let k = digits(j + 1);
                    if k == j + 1 {
                        return Err(err(j + 1, "expected denominator after '/'"));
                    }
                    let den: BigInt = text[j + 1..k].parse().unwrap();
                    if den.is_zero() {
                        return Err(err(j + 1, "zero denominator"));
                    }
                    i = k;
                    out.push((start, Tok::Rat(num, den)));
                } else {
                    i = j;
                    out.push((start, Tok::Num(num)));
                }
                continue;
            }
            b'x' => {
                let j = digits(i + 1);
                if j == i + 1 {
                    return Err(err(i, "expected variable index after 'x'"));
                }
                let idx: usize = text[i + 1..j]
                    .parse()
                    .map_err(|_| err(i + 1, "variable index too large"))?;
                i = j;
                out.push((start, Tok::Var(idx)));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(err(i, format!("unexpected character {ch:?}")));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    opts: ParseOptions,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, &Tok)> {
        self.tokens.get(self.pos).map(|(at, t)| (*at, t))
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |(at, _)| at)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().is_some_and(|(_, t)| t == tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = self.eat(&Tok::Minus);
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let at = self.here();
        match self.tokens.get(self.pos) {
            Some((_, Tok::Num(n))) => {
                let e = u32::try_from(n.clone())
                    .ok()
                    .filter(|e| *e <= self.opts.max_exponent)
                    .ok_or_else(|| {
                        err(at, format!("exponent {n} exceeds the cap {}", self.opts.max_exponent))
                    })?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => Err(err(at, "expected a nonnegative integer exponent")),
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.opts.nvars;
        let at = self.here();
        let Some((_, tok)) = self.tokens.get(self.pos).cloned() else {
            return Err(err(at, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Num(v) => Ok(Polynomial::constant(n, Rational::from_integer(v))),
            Tok::Rat(p, q) => Ok(Polynomial::constant(n, Rational::new(p, q))),
            Tok::Var(i) => {
                if i == 0 || i > n {
                    return Err(err(at, format!("variable x{i} out of range x1..x{n}")));
                }
                Ok(Polynomial::var(n, i - 1))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(err(self.here(), "expected ')'"));
                }
                Ok(inner)
            }
            other => Err(err(at, format!("unexpected {other}"))),
        }
    }
}

//! Expression language for phase-space functions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' INT)?
//! atom  := NUMBER | 'i' | 'PI' | IDENT | '(' expr ')'
//! ```
//!
//! `i` is the imaginary unit and `PI` the number pi; `pi` is an ordinary
//! identifier (the fermionic momentum in the model tables).

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::superpoly::{Grade, SuperPolynomial, VarTable};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// Nonnegative finite literal.
    Num(f64),
    Imag,
    Pi,
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    /// Evaluate over a variable table.
    pub fn to_poly(&self, table: &Arc<VarTable>) -> Result<SuperPolynomial> {
        Ok(match self {
            Expr::Num(v) => SuperPolynomial::constant(table, Complex64::new(*v, 0.0)),
            Expr::Imag => SuperPolynomial::constant(table, Complex64::new(0.0, 1.0)),
            Expr::Pi => SuperPolynomial::constant(table, Complex64::new(std::f64::consts::PI, 0.0)),
            Expr::Var(n) => SuperPolynomial::var(table, n)?,
            Expr::Neg(e) => e.to_poly(table)?.scale_real(-1.0),
            Expr::Add(a, b) => a.to_poly(table)?.try_add(&b.to_poly(table)?)?,
            Expr::Sub(a, b) => a.to_poly(table)?.try_sub(&b.to_poly(table)?)?,
            Expr::Mul(a, b) => a.to_poly(table)?.try_mul(&b.to_poly(table)?)?,
            Expr::Pow(e, n) => e.to_poly(table)?.pow(*n),
        })
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Minimal parentheses; printing then parsing gives back the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => write!(f, "{v}"),
            Expr::Imag => write!(f, "i"),
            Expr::Pi => write!(f, "PI"),
            Expr::Var(n) => write!(f, "{n}"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                write_child(f, e, e.precedence() < 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write_child(f, a, a.precedence() < 1)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { '+' } else { '-' })?;
                write_child(f, b, b.precedence() <= 1)
            }
            Expr::Mul(a, b) => {
                write_child(f, a, a.precedence() < 2)?;
                write!(f, "*")?;
                write_child(f, b, b.precedence() <= 2)
            }
            Expr::Pow(e, n) => {
                write_child(f, e, e.precedence() <= 4)?;
                write!(f, "^{n}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Int(u32),
    Ident(String),
    Sym(char),
    End,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        if ch.is_ascii_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() || ch == '.' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    i = j;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text = &src[start..i];
            let tok = if text.bytes().all(|b| b.is_ascii_digit()) {
                match text.parse::<u32>() {
                    Ok(n) => Tok::Int(n),
                    Err(_) => Tok::Num(text.parse().map_err(|_| perr(start, "bad number"))?),
                }
            } else {
                Tok::Num(text.parse().map_err(|_| perr(start, &format!("bad number '{text}'")))?)
            };
            out.push((start, tok));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*^()".contains(ch) {
            out.push((i, Tok::Sym(ch)));
            i += 1;
        } else {
            return Err(perr(i, &format!("unexpected character '{ch}'")));
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

fn perr(pos: usize, msg: &str) -> Error {
    Error::Parse { pos, msg: msg.to_string() }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    table: Option<&'a VarTable>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Sym('*') {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let start = self.pos();
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let exp_pos = self.pos();
        let n = match self.bump() {
            Tok::Int(n) => n,
            _ => return Err(perr(exp_pos, "exponent must be a nonnegative integer")),
        };
        if let (Expr::Var(name), Some(t)) = (&base, self.table) {
            if n >= 2 && t.grade(t.index_of(name)?) == Grade::Odd {
                return Err(perr(start, &format!("odd variable '{name}' raised to power {n}")));
            }
        }
        Ok(Expr::Pow(Box::new(base), n))
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(v) => Ok(Expr::Num(v)),
            Tok::Int(n) => Ok(Expr::Num(n as f64)),
            Tok::Ident(s) if s == "i" => Ok(Expr::Imag),
            Tok::Ident(s) if s == "PI" => Ok(Expr::Pi),
            Tok::Ident(s) => {
                if let Some(t) = self.table {
                    if t.index_of(&s).is_err() {
                        return Err(perr(pos, &format!("unknown identifier '{s}'")));
                    }
                }
                Ok(Expr::Var(s))
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Tok::Sym(')') => Ok(e),
                    _ => Err(perr(close, "expected ')'")),
                }
            }
            Tok::End => Err(perr(pos, "unexpected end of input")),
            t => Err(perr(pos, &format!("unexpected token {t:?}"))),
        }
    }
}

fn parse_inner(src: &str, table: Option<&VarTable>) -> Result<Expr> {
    let mut p = Parser { toks: lex(src)?, at: 0, table };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(perr(p.pos(), "trailing input"));
    }
    Ok(e)
}

/// Syntax only; identifiers are not resolved.
pub fn parse(src: &str) -> Result<Expr> {
    parse_inner(src, None)
}

/// Parse and validate against a table: unknown identifiers and powers of odd
/// variables are rejected.
pub fn parse_checked(src: &str, table: &VarTable) -> Result<Expr> {
    parse_inner(src, Some(table))
}

pub fn parse_poly(src: &str, table: &Arc<VarTable>) -> Result<SuperPolynomial> {
    parse_checked(src, table)?.to_poly(table)
}

//! Integer expressions in the torsion exponent `r` and named symbolic
//! parameters, with the handful of step functions the curated data uses.
//!
//! Grammar (ASCII): integers, identifiers, `+ - * ^`, parentheses, and the
//! function forms `min(e1, e2)` and `binom2(e)` (= e(e−1)/2). Builtin
//! identifiers: `r`, `theta` (0 at r = 1, else 1), `delta` (4, 2, 1 for
//! r = 1, 2, ≥3) and `delta16` (8, 4, 2, 1 for r = 1, 2, 3, ≥4). Every
//! other identifier is a symbolic parameter resolved from a
//! [`ParamAssignment`].

use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error in '{expr}': {reason}")]
    Parse { expr: String, reason: String },
    #[error("unknown identifier '{name}' in '{expr}'")]
    UnknownIdent { name: String, expr: String },
    #[error("arithmetic out of range evaluating '{expr}'")]
    OutOfRange { expr: String },
}

/// Values for the symbolic parameters appearing in curated data
/// (odd scalars, sign choices, undetermined small coefficients).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamAssignment(pub BTreeMap<String, i64>);

impl ParamAssignment {
    pub fn empty() -> Self {
        ParamAssignment(BTreeMap::new())
    }

    pub fn of(pairs: &[(&str, i64)]) -> Self {
        ParamAssignment(
            pairs
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
        )
    }

    /// The canonical assignment: odd scalars 1, signs +1, undetermined
    /// small coefficients 0.
    pub fn canonical() -> Self {
        ParamAssignment::of(&[
            ("a0", 1),
            ("x", 1),
            ("l", 1),
            ("y", 1),
            ("b", 0),
            ("c", 0),
            ("eps1", 1),
            ("eps2", 1),
        ])
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.get(name).copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RExpr {
    Int(i64),
    R,
    Theta,
    Delta,
    Delta16,
    Param(String),
    Min(Box<RExpr>, Box<RExpr>),
    Binom2(Box<RExpr>),
    Neg(Box<RExpr>),
    Add(Box<RExpr>, Box<RExpr>),
    Sub(Box<RExpr>, Box<RExpr>),
    Mul(Box<RExpr>, Box<RExpr>),
    Pow(Box<RExpr>, Box<RExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn lex(s: &str) -> Result<Vec<Tok>, ExprError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let v = text.parse::<i64>().map_err(|_| ExprError::Parse {
                    expr: s.to_string(),
                    reason: format!("integer '{text}' out of range"),
                })?;
                out.push(Tok::Int(v));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => {
                return Err(ExprError::Parse {
                    expr: s.to_string(),
                    reason: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, reason: &str) -> ExprError {
        ExprError::Parse {
            expr: self.src.to_string(),
            reason: reason.to_string(),
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ExprError> {
        if self.bump() == Some(t) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<RExpr, ExprError> {
        let mut acc = self.mul()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = RExpr::Add(Box::new(acc), Box::new(self.mul()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = RExpr::Sub(Box::new(acc), Box::new(self.mul()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn mul(&mut self) -> Result<RExpr, ExprError> {
        let mut acc = self.pow()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = RExpr::Mul(Box::new(acc), Box::new(self.pow()?));
        }
        Ok(acc)
    }

    fn pow(&mut self) -> Result<RExpr, ExprError> {
        let base = self.unary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            // Right-associative.
            let exp = self.pow()?;
            return Ok(RExpr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<RExpr, ExprError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(RExpr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<RExpr, ExprError> {
        match self.bump() {
            Some(Tok::Int(v)) => Ok(RExpr::Int(v)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                if self.peek() == Some(&Tok::LParen) {
                    self.bump();
                    let first = self.expr()?;
                    match name.as_str() {
                        "min" => {
                            self.expect(Tok::Comma, "',' in min(..)")?;
                            let second = self.expr()?;
                            self.expect(Tok::RParen, "')'")?;
                            Ok(RExpr::Min(Box::new(first), Box::new(second)))
                        }
                        "binom2" => {
                            self.expect(Tok::RParen, "')'")?;
                            Ok(RExpr::Binom2(Box::new(first)))
                        }
                        other => Err(self.err(&format!("unknown function '{other}'"))),
                    }
                } else {
                    Ok(match name.as_str() {
                        "r" => RExpr::R,
                        "theta" => RExpr::Theta,
                        "delta" => RExpr::Delta,
                        "delta16" => RExpr::Delta16,
                        _ => RExpr::Param(name),
                    })
                }
            }
            _ => Err(self.err("expected expression")),
        }
    }
}

pub fn parse(s: &str) -> Result<RExpr, ExprError> {
    let toks = lex(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        src: s,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing tokens"));
    }
    Ok(e)
}

fn eval_inner(
    e: &RExpr,
    r: u32,
    params: &ParamAssignment,
    src: &str,
) -> Result<i64, ExprError> {
    let oor = || ExprError::OutOfRange {
        expr: src.to_string(),
    };
    match e {
        RExpr::Int(v) => Ok(*v),
        RExpr::R => Ok(r as i64),
        RExpr::Theta => Ok(if r == 1 { 0 } else { 1 }),
        RExpr::Delta => Ok(match r {
            1 => 4,
            2 => 2,
            _ => 1,
        }),
        RExpr::Delta16 => Ok(match r {
            1 => 8,
            2 => 4,
            3 => 2,
            _ => 1,
        }),
        RExpr::Param(name) => {
            params.get(name).ok_or_else(|| ExprError::UnknownIdent {
                name: name.clone(),
                expr: src.to_string(),
            })
        }
        RExpr::Min(a, b) => Ok(eval_inner(a, r, params, src)?
            .min(eval_inner(b, r, params, src)?)),
        RExpr::Binom2(a) => {
            let v = eval_inner(a, r, params, src)?;
            v.checked_mul(v - 1).map(|p| p / 2).ok_or_else(oor)
        }
        RExpr::Neg(a) => eval_inner(a, r, params, src)?.checked_neg().ok_or_else(oor),
        RExpr::Add(a, b) => eval_inner(a, r, params, src)?
            .checked_add(eval_inner(b, r, params, src)?)
            .ok_or_else(oor),
        RExpr::Sub(a, b) => eval_inner(a, r, params, src)?
            .checked_sub(eval_inner(b, r, params, src)?)
            .ok_or_else(oor),
        RExpr::Mul(a, b) => eval_inner(a, r, params, src)?
            .checked_mul(eval_inner(b, r, params, src)?)
            .ok_or_else(oor),
        RExpr::Pow(a, b) => {
            let base = eval_inner(a, r, params, src)?;
            let exp = eval_inner(b, r, params, src)?;
            if !(0..=62).contains(&exp) {
                return Err(oor());
            }
            base.checked_pow(exp as u32).ok_or_else(oor)
        }
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(s: &str, r: u32, params: &ParamAssignment) -> Result<i64, ExprError> {
    let e = parse(s)?;
    eval_inner(&e, r, params, s)
}

/// Evaluates a parsed expression; `src` is used in error messages only.
pub fn eval(e: &RExpr, r: u32, params: &ParamAssignment, src: &str) -> Result<i64, ExprError> {
    eval_inner(e, r, params, src)
}

/// Collects the symbolic parameter names an expression mentions.
pub fn params_used(e: &RExpr, out: &mut Vec<String>) {
    match e {
        RExpr::Param(name) => {
            if !out.contains(name) {
                out.push(name.clone());
            }
        }
        RExpr::Min(a, b)
        | RExpr::Add(a, b)
        | RExpr::Sub(a, b)
        | RExpr::Mul(a, b)
        | RExpr::Pow(a, b) => {
            params_used(a, out);
            params_used(b, out);
        }
        RExpr::Binom2(a) | RExpr::Neg(a) => params_used(a, out),
        _ => {}
    }
}

/// A condition restricting a record to a range of exponents r.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RCond {
    Any,
    Eq(u32),
    Le(u32),
    Ge(u32),
}

impl RCond {
    pub fn parse(s: &str) -> Result<RCond, ExprError> {
        let bad = |reason: &str| ExprError::Parse {
            expr: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        if s == "*" {
            return Ok(RCond::Any);
        }
        let rest = s
            .strip_prefix('r')
            .ok_or_else(|| bad("expected '*' or an r-condition"))?;
        if let Some(v) = rest.strip_prefix("<=") {
            return Ok(RCond::Le(v.parse().map_err(|_| bad("bad bound"))?));
        }
        if let Some(v) = rest.strip_prefix(">=") {
            return Ok(RCond::Ge(v.parse().map_err(|_| bad("bad bound"))?));
        }
        if let Some(v) = rest.strip_prefix('=') {
            return Ok(RCond::Eq(v.parse().map_err(|_| bad("bad bound"))?));
        }
        Err(bad("expected '=', '<=' or '>=' after 'r'"))
    }

    pub fn matches(&self, r: u32) -> bool {
        match self {
            RCond::Any => true,
            RCond::Eq(v) => r == *v,
            RCond::Le(v) => r <= *v,
            RCond::Ge(v) => r >= *v,
        }
    }
}

impl std::fmt::Display for RCond {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RCond::Any => write!(f, "*"),
            RCond::Eq(v) => write!(f, "r={v}"),
            RCond::Le(v) => write!(f, "r<={v}"),
            RCond::Ge(v) => write!(f, "r>={v}"),
        }
    }
}

//! Recursive-descent parser for the polynomial grammar
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := variable | uint | 'a' | '(' expr ')'
//! ```
//!
//! Implicit multiplication is rejected. The rational extension used for
//! differential forms additionally allows `/`, negative exponents and
//! `d(expr)`.

use crate::error::{Error, Result};
use crate::field::FieldSpec;

use super::monomial::{var_index, MonomialOrder};
use super::polynomial::Polynomial;

const MAX_EXPONENT: u64 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i].parse::<u64>().map_err(|_| Error::Syntax {
                    pos: start,
                    msg: "integer literal too large".into(),
                })?;
                out.push((Tok::Num(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::Syntax { pos: start, msg: format!("unexpected character `{other}`") })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub(crate) enum Expr {
    Num(u64),
    Var(usize),
    Gen,
    Diff(Box<Expr>),
    /// Signed summands.
    Sum(Vec<(bool, Expr)>),
    /// Factors; `true` marks a divisor.
    Product(Vec<(bool, Expr)>),
    Pow(Box<Expr>, i64),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    rational: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut parts = Vec::new();
        let mut neg = false;
        match self.peek() {
            Some(Tok::Minus) => {
                neg = true;
                self.bump();
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        parts.push((neg, self.term()?));
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    parts.push((false, self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    parts.push((true, self.term()?));
                }
                _ => break,
            }
        }
        Ok(if parts.len() == 1 && !parts[0].0 { parts.pop().unwrap().1 } else { Expr::Sum(parts) })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![(false, self.factor()?)];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    factors.push((false, self.factor()?));
                }
                Some(Tok::Slash) if self.rational => {
                    self.bump();
                    factors.push((true, self.factor()?));
                }
                Some(Tok::Slash) => return self.err("division is not allowed in polynomials"),
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return self.err("implicit multiplication is not allowed; use `*`")
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap().1 } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let mut neg = false;
            if self.peek() == Some(&Tok::Minus) {
                if !self.rational {
                    return self.err("negative exponents are not allowed in polynomials");
                }
                neg = true;
                self.bump();
            }
            match self.bump() {
                Some(Tok::Num(n)) if n <= MAX_EXPONENT => {
                    let e = n as i64;
                    return Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }));
                }
                Some(Tok::Num(_)) => {
                    self.pos -= 1;
                    return self.err(format!("exponent exceeds {MAX_EXPONENT}"));
                }
                _ => {
                    self.pos -= 1;
                    return self.err("expected an unsigned integer exponent");
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Expr::Num(n)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    self.pos -= 1;
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                if name == "a" {
                    return Ok(Expr::Gen);
                }
                if name == "d" && self.rational && self.peek() == Some(&Tok::LParen) {
                    self.bump();
                    let e = self.expr()?;
                    if self.bump() != Some(Tok::RParen) {
                        self.pos -= 1;
                        return self.err("expected `)` closing d(...)");
                    }
                    return Ok(Expr::Diff(Box::new(e)));
                }
                match var_index(&name) {
                    Some(i) => Ok(Expr::Var(i)),
                    None => Err(Error::UnknownVariable { name, pos: at }),
                }
            }
            Some(_) => {
                self.pos -= 1;
                self.err("expected a variable, number or `(`")
            }
            None => self.err("unexpected end of input"),
        }
    }
}

pub(crate) fn parse_expr(src: &str, rational: bool) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len(), rational };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Values an expression can be evaluated into.
pub(crate) trait Evaluator {
    type Value: Clone;
    fn num(&self, n: u64) -> Result<Self::Value>;
    fn var(&self, i: usize) -> Result<Self::Value>;
    fn gen(&self) -> Result<Self::Value>;
    fn diff(&self, _v: Self::Value) -> Result<Self::Value> {
        Err(Error::Syntax { pos: 0, msg: "differentials are not allowed here".into() })
    }
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn neg(&self, a: Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn div(&self, _a: Self::Value, _b: Self::Value) -> Result<Self::Value> {
        Err(Error::Syntax { pos: 0, msg: "division is not allowed here".into() })
    }
    fn pow(&self, a: Self::Value, e: i64) -> Result<Self::Value>;
}

pub(crate) fn eval<E: Evaluator>(ev: &E, e: &Expr) -> Result<E::Value> {
    match e {
        Expr::Num(n) => ev.num(*n),
        Expr::Var(i) => ev.var(*i),
        Expr::Gen => ev.gen(),
        Expr::Diff(inner) => ev.diff(eval(ev, inner)?),
        Expr::Sum(parts) => {
            let mut acc: Option<E::Value> = None;
            for (neg, p) in parts {
                let mut v = eval(ev, p)?;
                if *neg {
                    v = ev.neg(v)?;
                }
                acc = Some(match acc {
                    None => v,
                    Some(a) => ev.add(a, v)?,
                });
            }
            Ok(acc.expect("nonempty sum"))
        }
        Expr::Product(parts) => {
            let mut acc = eval(ev, &parts[0].1)?;
            for (div, p) in &parts[1..] {
                let v = eval(ev, p)?;
                acc = if *div { ev.div(acc, v)? } else { ev.mul(acc, v)? };
            }
            Ok(acc)
        }
        Expr::Pow(b, k) => ev.pow(eval(ev, b)?, *k),
    }
}

struct PolyEval {
    field: FieldSpec,
    order: MonomialOrder,
    vars: Option<Vec<usize>>,
}

impl Evaluator for PolyEval {
    type Value = Polynomial;
    fn num(&self, n: u64) -> Result<Polynomial> {
        Ok(Polynomial::constant(self.field, self.order, self.field.from_u64(n)))
    }
    fn var(&self, i: usize) -> Result<Polynomial> {
        if let Some(allowed) = &self.vars {
            if !allowed.contains(&i) {
                return Err(Error::UnknownVariable {
                    name: super::monomial::VAR_NAMES[i].to_string(),
                    pos: 0,
                });
            }
        }
        Ok(Polynomial::var(self.field, self.order, i))
    }
    fn gen(&self) -> Result<Polynomial> {
        match self.field.generator() {
            Some(g) => Ok(Polynomial::constant(self.field, self.order, g)),
            None => Err(Error::UnknownVariable { name: "a".into(), pos: 0 }),
        }
    }
    fn add(&self, a: Polynomial, b: Polynomial) -> Result<Polynomial> {
        Ok(a.add(&b))
    }
    fn neg(&self, a: Polynomial) -> Result<Polynomial> {
        Ok(a.neg())
    }
    fn mul(&self, a: Polynomial, b: Polynomial) -> Result<Polynomial> {
        Ok(a.mul(&b))
    }
    fn pow(&self, a: Polynomial, e: i64) -> Result<Polynomial> {
        let out = a.pow(e as u32);
        if out.terms().iter().any(|(m, _)| m.0.iter().any(|&x| x as u64 > MAX_EXPONENT)) {
            return Err(Error::Syntax { pos: 0, msg: format!("exponent exceeds {MAX_EXPONENT}") });
        }
        Ok(out)
    }
}

/// Parse a polynomial in the variables x, y, z, u, v, w (and `a`, the
/// extension generator, when the field has one).
pub fn parse(src: &str, field: FieldSpec, order: MonomialOrder) -> Result<Polynomial> {
    let e = parse_expr(src, false)?;
    eval(&PolyEval { field, order, vars: None }, &e).map_err(|err| locate(err, src))
}

/// Like [`parse`] but restricted to the given variables.
pub fn parse_in(src: &str, field: FieldSpec, order: MonomialOrder, vars: &[usize]) -> Result<Polynomial> {
    let e = parse_expr(src, false)?;
    eval(&PolyEval { field, order, vars: Some(vars.to_vec()) }, &e).map_err(|err| locate(err, src))
}

/// Evaluation errors carry no position; point them at the first occurrence
/// of the offending name.
fn locate(err: Error, src: &str) -> Error {
    match err {
        Error::UnknownVariable { name, .. } => {
            let pos = find_ident(src, &name).unwrap_or(0);
            Error::UnknownVariable { name, pos }
        }
        other => other,
    }
}

fn find_ident(src: &str, name: &str) -> Option<usize> {
    lex(src).ok()?.into_iter().find(|(t, _)| *t == Tok::Ident(name.to_string())).map(|(_, p)| p)
}

/// Dense univariate polynomial in `a` over the prime field.
struct GenEval {
    p: u64,
}

impl GenEval {
    fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
}

impl Evaluator for GenEval {
    type Value = Vec<u64>;
    fn num(&self, n: u64) -> Result<Vec<u64>> {
        Ok(Self::trim(vec![n % self.p]))
    }
    fn var(&self, i: usize) -> Result<Vec<u64>> {
        Err(Error::UnknownVariable { name: super::monomial::VAR_NAMES[i].into(), pos: 0 })
    }
    fn gen(&self) -> Result<Vec<u64>> {
        Ok(vec![0, 1])
    }
    fn add(&self, a: Vec<u64>, b: Vec<u64>) -> Result<Vec<u64>> {
        let n = a.len().max(b.len());
        let r = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        Ok(Self::trim(r))
    }
    fn neg(&self, a: Vec<u64>) -> Result<Vec<u64>> {
        Ok(a.into_iter().map(|c| (self.p - c) % self.p).collect())
    }
    fn mul(&self, a: Vec<u64>, b: Vec<u64>) -> Result<Vec<u64>> {
        if a.is_empty() || b.is_empty() {
            return Ok(Vec::new());
        }
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x * y) % self.p;
            }
        }
        Ok(Self::trim(r))
    }
    fn pow(&self, a: Vec<u64>, e: i64) -> Result<Vec<u64>> {
        let mut acc = vec![1u64];
        for _ in 0..e {
            acc = self.mul(acc, a.clone())?;
        }
        Ok(acc)
    }
}

/// Coefficients (lowest first) of a univariate polynomial in `a` over F_p.
pub(crate) fn parse_univariate_in_generator(src: &str, base: FieldSpec) -> Result<Vec<u64>> {
    let e = parse_expr(src, false)?;
    eval(&GenEval { p: base.characteristic() as u64 }, &e).map_err(|err| locate(err, src))
}

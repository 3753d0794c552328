use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

use super::monomial::{Monomial, MonomialOrder, NVARS};

/// Sparse multivariate polynomial. Terms are kept sorted in descending
/// order under the attached monomial order and never hold zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    field: FieldSpec,
    order: MonomialOrder,
    terms: Vec<(Monomial, FieldElement)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.field != other.field || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            return self.terms == other.terms;
        }
        let mut a = self.terms.clone();
        let mut b = other.terms.clone();
        a.sort();
        b.sort();
        a == b
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(field: FieldSpec, order: MonomialOrder) -> Polynomial {
        Polynomial { field, order, terms: Vec::new() }
    }

    pub fn constant(field: FieldSpec, order: MonomialOrder, c: FieldElement) -> Polynomial {
        Self::term(field, order, Monomial::ONE, c)
    }

    pub fn one(field: FieldSpec, order: MonomialOrder) -> Polynomial {
        Self::constant(field, order, field.one())
    }

    pub fn term(field: FieldSpec, order: MonomialOrder, m: Monomial, c: FieldElement) -> Polynomial {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { field, order, terms }
    }

    pub fn var(field: FieldSpec, order: MonomialOrder, i: usize) -> Polynomial {
        Self::term(field, order, Monomial::var(i), field.one())
    }

    pub fn monomial(field: FieldSpec, order: MonomialOrder, m: Monomial) -> Polynomial {
        Self::term(field, order, m, field.one())
    }

    /// Collect arbitrary terms: duplicates are summed, zeros dropped.
    pub fn from_terms(
        field: FieldSpec,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Polynomial {
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(FieldElement::ZERO);
            *e = field.add(*e, c);
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { field, order, terms }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, FieldElement)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Same polynomial re-sorted under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { field: self.field, order, terms }
    }

    pub fn leading_term(&self) -> Result<(Monomial, FieldElement)> {
        self.terms.first().copied().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.terms.first().map(|t| t.1)
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.iter().find(|(t, _)| t == m).map_or(FieldElement::ZERO, |t| t.1)
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> FieldElement {
        self.coeff(&Monomial::ONE)
    }

    /// Maximal total degree of a term (0 for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Minimal total degree of a term (the order at the origin).
    pub fn min_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).min().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    /// Largest power of `var` dividing every term.
    pub fn valuation_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).min().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(var) > 0)
    }

    pub fn vars_used(&self) -> [bool; NVARS] {
        let mut used = [false; NVARS];
        for (m, _) in &self.terms {
            for (i, u) in used.iter_mut().enumerate() {
                *u |= m.exponent(i) > 0;
            }
        }
        used
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        self.check_compatible(other);
        let other_terms;
        let rhs = if other.order == self.order {
            &other.terms
        } else {
            other_terms = other.with_order(self.order).terms;
            &other_terms
        };
        let f = self.field;
        let ord = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + rhs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.len() {
            let (ma, ca) = self.terms[i];
            let (mb, cb) = rhs[j];
            let cb = if negate_other { f.neg(cb) } else { cb };
            match ord.cmp(&ma, &mb) {
                Ordering::Greater => {
                    out.push((ma, ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb, cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(ca, cb);
                    if !c.is_zero() {
                        out.push((ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for &(m, c) in &rhs[j..] {
            out.push((m, if negate_other { f.neg(c) } else { c }));
        }
        Polynomial { field: f, order: ord, terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.field;
        Polynomial {
            field: f,
            order: self.order,
            terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.field, self.order);
        }
        let f = self.field;
        Polynomial {
            field: f,
            order: self.order,
            terms: self.terms.iter().map(|&(m, d)| (m, f.mul(c, d))).collect(),
        }
    }

    /// Multiply by the term `c * m`; order is preserved by multiplicativity.
    pub fn mul_term(&self, m: &Monomial, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.field, self.order);
        }
        let f = self.field;
        Polynomial {
            field: f,
            order: self.order,
            terms: self.terms.iter().map(|&(t, d)| (t.mul(m), f.mul(c, d))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field, self.order);
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms[0];
            return self.mul_term(&m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms[0];
            return other.with_order(self.order).mul_term(&m, c);
        }
        let f = self.field;
        let mut acc: HashMap<Monomial, FieldElement> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(&mb)).or_insert(FieldElement::ZERO);
                *e = f.add(*e, f.mul(ca, cb));
            }
        }
        let ord = self.order;
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Polynomial { field: f, order: ord, terms }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: u32) -> Polynomial {
        self.pow_filtered(k, |_| true)
    }

    /// `self^k` keeping only monomials accepted by `keep` after every
    /// multiplication. Sound whenever the rejected monomials span an ideal
    /// (e.g. a monomial ideal), since rejected terms never contribute to kept
    /// ones.
    pub fn pow_filtered(&self, mut k: u32, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        let filter = |p: Polynomial| -> Polynomial {
            let Polynomial { field, order, terms } = p;
            Polynomial { field, order, terms: terms.into_iter().filter(|(m, _)| keep(m)).collect() }
        };
        let mut acc = filter(Self::one(self.field, self.order));
        let mut base = filter(self.clone());
        while k > 0 {
            if k & 1 == 1 {
                acc = filter(acc.mul(&base));
            }
            k >>= 1;
            if k > 0 {
                base = filter(base.mul(&base));
            }
        }
        acc
    }

    /// Formal partial derivative in `var`; exponents divisible by p vanish.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let f = self.field;
        let terms = self.terms.iter().filter_map(|&(m, c)| {
            let e = m.exponent(var);
            if e == 0 {
                return None;
            }
            let c = f.mul(c, f.from_u64(e as u64));
            if c.is_zero() {
                return None;
            }
            let mut ex = m.0;
            ex[var] -= 1;
            Some((Monomial(ex), c))
        });
        // lowering one exponent can reorder terms under either order
        Self::from_terms(f, self.order, terms.collect::<Vec<_>>())
    }

    /// Divide every term by the monomial `m`; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let terms: Option<Vec<_>> = self.terms.iter().map(|&(t, c)| t.div(m).map(|q| (q, c))).collect();
        terms.map(|t| Polynomial { field: self.field, order: self.order, terms: t })
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(self.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// Substitute polynomials for variables; unlisted variables are kept.
    pub fn substitute(&self, images: &[(usize, Polynomial)]) -> Polynomial {
        let f = self.field;
        let ord = self.order;
        let mut out = Self::zero(f, ord);
        let mut powers: HashMap<(usize, u16), Polynomial> = HashMap::new();
        for &(m, c) in &self.terms {
            let mut kept = m;
            let mut t = Self::one(f, ord);
            for (var, img) in images {
                let e = m.exponent(*var);
                kept.0[*var] = 0;
                if e > 0 {
                    let pw = powers.entry((*var, e)).or_insert_with(|| img.with_order(ord).pow(e as u32));
                    t = t.mul(pw);
                }
            }
            out = out.add(&t.mul_term(&kept, c));
        }
        out
    }

    /// Coefficients with respect to `var`: entry `k` is the coefficient of
    /// `var^k`, a polynomial free of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let d = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, FieldElement)>> = vec![Vec::new(); d + 1];
        for &(m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            let mut r = m;
            r.0[var] = 0;
            buckets[e].push((r, c));
        }
        buckets
            .into_iter()
            .map(|t| Polynomial { field: self.field, order: self.order, terms: t })
            .collect()
    }

    /// Inverse of [`Polynomial::coefficients_in`].
    pub fn from_coefficients_in(
        field: FieldSpec,
        order: MonomialOrder,
        var: usize,
        coeffs: &[Polynomial],
    ) -> Polynomial {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let xk = Monomial::var_pow(var, k as u16);
            terms.extend(c.terms.iter().map(|&(m, v)| (m.mul(&xk), v)));
        }
        Self::from_terms(field, order, terms)
    }

    /// Render with an explicit `*` and `^`, terms in descending order and no
    /// spaces, e.g. `z^2+x^3+y^5`.
    pub fn to_compact_string(&self) -> String {
        self.render(false)
    }

    fn render(&self, spaced: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let f = self.field;
        let mut out = String::new();
        for (idx, &(m, c)) in self.terms.iter().enumerate() {
            let (neg, coeff) = if c.is_prime_field() {
                let v = f.signed(c);
                (v < 0, v.unsigned_abs().to_string())
            } else {
                let s = f.format(c);
                if s.contains(' ') {
                    (false, format!("({s})"))
                } else {
                    match s.strip_prefix('-') {
                        Some(rest) => (true, rest.to_string()),
                        None => (false, s),
                    }
                }
            };
            let body = if m.is_one() {
                coeff
            } else if coeff == "1" {
                m.to_string()
            } else {
                format!("{coeff}*{m}")
            };
            match (idx, neg, spaced) {
                (0, true, _) => out.push('-'),
                (0, false, _) => {}
                (_, true, true) => out.push_str(" - "),
                (_, false, true) => out.push_str(" + "),
                (_, true, false) => out.push('-'),
                (_, false, false) => out.push('+'),
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

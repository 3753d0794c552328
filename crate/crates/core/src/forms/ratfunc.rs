use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{Monomial, MonomialOrder, Polynomial, NVARS};

pub(crate) const GLOBAL: MonomialOrder = MonomialOrder::GlobalDegRevLex;

/// Exact quotient `a / b`, `None` if `b` does not divide `a`.
pub fn div_exact(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let field = a.field();
    let (a, b) = (a.with_order(GLOBAL), b.with_order(GLOBAL));
    let (bm, bc) = b.leading_term().ok()?;
    let mut q = Polynomial::zero(field, GLOBAL);
    let mut r = a;
    while let Ok((rm, rc)) = r.leading_term() {
        let m = rm.div(&bm)?;
        let c = field.div(rc, bc).ok()?;
        q = q.add(&Polynomial::term(field, GLOBAL, m, c));
        r = r.sub(&b.mul_term(&m, c));
    }
    Some(q)
}

fn main_var(a: &Polynomial, b: &Polynomial) -> Option<usize> {
    (0..NVARS).rev().find(|&v| a.uses_var(v) || b.uses_var(v))
}

fn lead_in(p: &Polynomial, v: usize) -> Polynomial {
    p.coefficients_in(v).pop().expect("nonzero polynomial")
}

/// Content of `p` as a polynomial in `v`: the gcd of its coefficients.
fn content(p: &Polynomial, v: usize) -> Polynomial {
    let mut g = Polynomial::zero(p.field(), GLOBAL);
    for c in p.coefficients_in(v) {
        if !c.is_zero() {
            g = gcd(&g, &c);
            if g.is_constant() {
                break;
            }
        }
    }
    g
}

fn primitive_part(p: &Polynomial, v: usize) -> Polynomial {
    div_exact(p, &content(p, v)).expect("content divides")
}

/// `lc_v(b)^k * a mod b` as polynomials in `v`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v);
    let lb = lead_in(b, v);
    let one = a.field().one();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let shift = Monomial::var_pow(v, r.degree_in(v) - db);
        let lr = lead_in(&r, v);
        r = r.mul(&lb).sub(&b.mul(&lr).mul_term(&shift, one));
    }
    r
}

/// Monic gcd (degrevlex leading coefficient 1), by recursion on the
/// largest variable with primitive pseudo-remainder sequences.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (a, b) = (a.with_order(GLOBAL), b.with_order(GLOBAL));
    let field = a.field();
    if a.is_zero() {
        return if b.is_zero() { b } else { b.monic() };
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(field, GLOBAL);
    }
    let v = main_var(&a, &b).expect("nonconstant");
    let (ca, cb) = (content(&a, v), content(&b, v));
    let c = gcd(&ca, &cb);
    let (pa, pb) = (div_exact(&a, &ca).expect("content"), div_exact(&b, &cb).expect("content"));
    let (mut r0, mut r1) = if pa.degree_in(v) >= pb.degree_in(v) { (pa, pb) } else { (pb, pa) };
    let g = loop {
        if r1.is_zero() {
            break primitive_part(&r0, v);
        }
        if r1.degree_in(v) == 0 {
            break Polynomial::one(field, GLOBAL);
        }
        let r = pseudo_rem(&r0, &r1, v);
        r0 = r1;
        r1 = if r.is_zero() { r } else { primitive_part(&r, v) };
    };
    c.mul(&g).monic()
}

/// Reduced fraction `num / den` with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Polynomial,
    den: Polynomial,
}

impl RatFunc {
    pub fn new(num: &Polynomial, den: &Polynomial) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionUndefined("zero denominator".into()));
        }
        let (num, den) = (num.with_order(GLOBAL), den.with_order(GLOBAL));
        let field = num.field();
        if num.is_zero() {
            return Ok(RatFunc { num, den: Polynomial::one(field, GLOBAL) });
        }
        let g = gcd(&num, &den);
        let mut n = div_exact(&num, &g).expect("gcd divides");
        let mut d = div_exact(&den, &g).expect("gcd divides");
        let lc = d.leading_coeff().expect("nonzero");
        let inv = field.inv(lc)?;
        n = n.scale(inv);
        d = d.scale(inv);
        Ok(RatFunc { num: n, den: d })
    }

    pub fn from_poly(p: &Polynomial) -> RatFunc {
        RatFunc { num: p.with_order(GLOBAL), den: Polynomial::one(p.field(), GLOBAL) }
    }

    pub fn zero(field: FieldSpec) -> RatFunc {
        Self::from_poly(&Polynomial::zero(field, GLOBAL))
    }

    pub fn one(field: FieldSpec) -> RatFunc {
        Self::from_poly(&Polynomial::one(field, GLOBAL))
    }

    pub fn var(field: FieldSpec, i: usize) -> RatFunc {
        Self::from_poly(&Polynomial::var(field, GLOBAL, i))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn field(&self) -> FieldSpec {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        RatFunc::new(&num, &self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num.mul(&o.num), &self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(&self.den, &self.num)
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<RatFunc> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs() as u32;
        Ok(RatFunc { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// Quotient rule.
    pub fn derivative(&self, var: usize) -> RatFunc {
        let num = self.num.derivative(var).mul(&self.den).sub(&self.num.mul(&self.den.derivative(var)));
        RatFunc::new(&num, &self.den.mul(&self.den)).expect("nonzero denominator")
    }

    /// Order of vanishing along `{var = 0}` (negative for a pole).
    pub fn valuation_in(&self, var: usize) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.valuation_in(var) as i64 - self.den.valuation_in(var) as i64)
    }

    /// Substitute rational functions for variables.
    pub fn substitute(&self, images: &[(usize, RatFunc)]) -> Result<RatFunc> {
        let (n, d) = (subst_poly(&self.num, images)?, subst_poly(&self.den, images)?);
        n.div(&d)
    }
}

/// `p(images)` with one common denominator `prod b_i^(deg_i p)`.
fn subst_poly(p: &Polynomial, images: &[(usize, RatFunc)]) -> Result<RatFunc> {
    let field = p.field();
    let degs: Vec<u16> = images.iter().map(|(v, _)| p.degree_in(*v)).collect();
    let mut num = Polynomial::zero(field, GLOBAL);
    for &(m, c) in p.terms() {
        let mut kept = m;
        let mut t = Polynomial::one(field, GLOBAL);
        for ((v, img), &d) in images.iter().zip(&degs) {
            let e = m.exponent(*v);
            kept = kept.div(&Monomial::var_pow(*v, e)).expect("divides");
            t = t.mul(&img.num.pow(e as u32)).mul(&img.den.pow((d - e) as u32));
        }
        num = num.add(&t.mul_term(&kept, c));
    }
    let mut den = Polynomial::one(field, GLOBAL);
    for ((_, img), &d) in images.iter().zip(&degs) {
        den = den.mul(&img.den.pow(d as u32));
    }
    RatFunc::new(&num, &den)
}

pub(crate) fn wrap(p: &Polynomial) -> String {
    if p.len() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if is_one(&self.den) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

pub(crate) fn is_one(p: &Polynomial) -> bool {
    p.is_constant() && p.constant_term().is_one()
}

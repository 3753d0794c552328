//! Rational 1-forms on `{f = 0}`: pairing with derivations, pullback along
//! rational maps and pole orders.

mod ratfunc;

pub use ratfunc::{div_exact, gcd, RatFunc};

use std::fmt;

use ratfunc::{is_one, wrap, GLOBAL};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::parse::{eval, parse_expr, Evaluator};
use crate::poly::{Polynomial, VectorPoly, NVARS, VAR_NAMES};
use crate::sing::Derivation;
use crate::stdbasis::reduce_mod;

/// A rational 1-form `sum A_i dx_i`, coefficients collected per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflexiveForm {
    coeffs: Vec<RatFunc>,
}

impl ReflexiveForm {
    pub fn zero(field: FieldSpec) -> ReflexiveForm {
        ReflexiveForm { coeffs: vec![RatFunc::zero(field); NVARS] }
    }

    pub fn from_coefficients(coeffs: Vec<RatFunc>) -> ReflexiveForm {
        assert_eq!(coeffs.len(), NVARS);
        ReflexiveForm { coeffs }
    }

    /// `dx_i`.
    pub fn dvar(field: FieldSpec, i: usize) -> ReflexiveForm {
        let mut w = Self::zero(field);
        w.coeffs[i] = RatFunc::one(field);
        w
    }

    /// `dg = sum dg/dx_i dx_i`.
    pub fn d(g: &RatFunc) -> ReflexiveForm {
        ReflexiveForm { coeffs: (0..NVARS).map(|i| g.derivative(i)).collect() }
    }

    pub fn coefficient(&self, i: usize) -> &RatFunc {
        &self.coeffs[i]
    }

    pub fn coefficients(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_zero)
    }

    pub fn add(&self, o: &ReflexiveForm) -> ReflexiveForm {
        ReflexiveForm { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn neg(&self) -> ReflexiveForm {
        ReflexiveForm { coeffs: self.coeffs.iter().map(RatFunc::neg).collect() }
    }

    pub fn sub(&self, o: &ReflexiveForm) -> ReflexiveForm {
        self.add(&o.neg())
    }

    pub fn scale(&self, g: &RatFunc) -> ReflexiveForm {
        ReflexiveForm { coeffs: self.coeffs.iter().map(|a| a.mul(g)).collect() }
    }
}

impl fmt::Display for ReflexiveForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (c, name) in self.coeffs.iter().zip(VAR_NAMES) {
            if c.is_zero() {
                continue;
            }
            let n = c.num();
            let lead = if is_one(n) {
                String::new()
            } else if is_one(&n.neg()) {
                "-".to_string()
            } else {
                format!("{}*", wrap(n))
            };
            let tail = if is_one(c.den()) { String::new() } else { format!("/{}", wrap(c.den())) };
            parts.push(format!("{lead}d{name}{tail}"));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        let mut out = parts[0].clone();
        for part in &parts[1..] {
            match part.strip_prefix('-') {
                Some(rest) => out.push_str(&format!(" - {rest}")),
                None => out.push_str(&format!(" + {part}")),
            }
        }
        f.write_str(&out)
    }
}

/// Substitution of rational functions for some of the variables; the
/// others are left fixed.
#[derive(Clone, Debug)]
pub struct RationalMap {
    images: Vec<(usize, RatFunc)>,
}

impl RationalMap {
    pub fn new(images: Vec<(usize, RatFunc)>) -> RationalMap {
        RationalMap { images }
    }

    pub fn identity() -> RationalMap {
        RationalMap { images: Vec::new() }
    }

    pub fn images(&self) -> &[(usize, RatFunc)] {
        &self.images
    }

    pub fn apply(&self, g: &RatFunc) -> Result<RatFunc> {
        if self.images.is_empty() {
            return Ok(g.clone());
        }
        g.substitute(&self.images)
    }

    fn image_of_var(&self, field: FieldSpec, i: usize) -> RatFunc {
        match self.images.iter().find(|(v, _)| *v == i) {
            Some((_, img)) => img.clone(),
            None => RatFunc::var(field, i),
        }
    }
}

/// `phi^* alpha = sum phi^*(A_i) d(phi^* x_i)`.
pub fn pullback(alpha: &ReflexiveForm, phi: &RationalMap) -> Result<ReflexiveForm> {
    let field = alpha.coeffs[0].field();
    let mut out = ReflexiveForm::zero(field);
    for (i, a) in alpha.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let img = phi.apply(a)?;
        let dx = ReflexiveForm::d(&phi.image_of_var(field, i));
        out = out.add(&dx.scale(&img));
    }
    Ok(out)
}

/// Largest pole order of a coefficient along `{var = 0}`, at least 0.
pub fn pole_order(alpha: &ReflexiveForm, var: usize) -> u32 {
    alpha.coeffs.iter().filter_map(|c| c.valuation_in(var)).map(|v| (-v).max(0) as u32).max().unwrap_or(0)
}

fn rem(p: &Polynomial, f: &Polynomial) -> Polynomial {
    reduce_mod(&VectorPoly::new(vec![p.with_order(GLOBAL)]), f).into_components().remove(0)
}

fn check_denominators(alpha: &ReflexiveForm, f: &Polynomial) -> Result<()> {
    for (c, name) in alpha.coeffs.iter().zip(VAR_NAMES) {
        if !c.is_zero() && rem(c.den(), f).is_zero() {
            return Err(Error::DivisionUndefined(format!("denominator of the d{name} coefficient vanishes on f = 0")));
        }
    }
    Ok(())
}

/// `alpha(v) = sum A_i v(x_i)`, numerator reduced modulo `f`.
pub fn pair(alpha: &ReflexiveForm, v: &Derivation, f: &Polynomial) -> Result<RatFunc> {
    let f = f.with_order(GLOBAL);
    check_denominators(alpha, &f)?;
    let mut acc = RatFunc::zero(f.field());
    for (i, c) in v.coeffs.components().iter().enumerate() {
        acc = acc.add(&alpha.coeffs[i].mul(&RatFunc::from_poly(c)));
    }
    RatFunc::new(&rem(acc.num(), &f), acc.den())
}

/// Equality of rational functions on `{f = 0}`.
pub fn functions_equal_on(a: &RatFunc, b: &RatFunc, f: &Polynomial) -> bool {
    let f = f.with_order(GLOBAL);
    rem(&a.num().mul(b.den()).sub(&b.num().mul(a.den())), &f).is_zero()
}

/// Equality of `a` and `b` as rational 1-forms on `{f = 0}`.
///
/// After clearing denominators the difference `N = sum N_i dx_i` must be a
/// multiple of `df` over the function field of `{f = 0}`: every minor
/// `N_i f_j - N_j f_i` lies in `(f)`. When `df` itself vanishes on
/// `{f = 0}` every `N_i` must lie in `(f)`.
pub fn forms_equal_on(a: &ReflexiveForm, b: &ReflexiveForm, f: &Polynomial) -> Result<bool> {
    let f = f.with_order(GLOBAL);
    let diff = a.sub(b);
    check_denominators(a, &f)?;
    check_denominators(b, &f)?;
    if diff.is_zero() {
        return Ok(true);
    }
    let mut lcm = Polynomial::one(f.field(), GLOBAL);
    for c in &diff.coeffs {
        let g = gcd(&lcm, c.den());
        lcm = div_exact(&lcm.mul(c.den()), &g).expect("gcd divides");
    }
    let n: Vec<Polynomial> =
        diff.coeffs.iter().map(|c| c.num().mul(&div_exact(&lcm, c.den()).expect("divides lcm"))).collect();
    let grad: Vec<Polynomial> = (0..NVARS).map(|i| rem(&f.derivative(i), &f)).collect();
    if grad.iter().all(Polynomial::is_zero) {
        return Ok(n.iter().all(|c| rem(c, &f).is_zero()));
    }
    for i in 0..NVARS {
        for j in i + 1..NVARS {
            if !rem(&n[i].mul(&grad[j]).sub(&n[j].mul(&grad[i])), &f).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The relation `df = 0` among the differentials on `{f = 0}`.
#[derive(Clone, Debug)]
pub struct KahlerRelation {
    pub form: ReflexiveForm,
    /// Variables whose partial derivative is nonzero, with the derivative.
    pub terms: Vec<(usize, Polynomial)>,
    pub vanishes: bool,
}

impl fmt::Display for KahlerRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.form)
    }
}

pub fn verify_relation(f: &Polynomial) -> Result<KahlerRelation> {
    let form = ReflexiveForm::d(&RatFunc::from_poly(f));
    let terms = (0..NVARS).filter_map(|i| {
        let d = f.derivative(i).with_order(GLOBAL);
        (!d.is_zero()).then_some((i, d))
    });
    let terms = terms.collect();
    let vanishes = forms_equal_on(&form, &ReflexiveForm::zero(f.field()), f)?;
    Ok(KahlerRelation { form, terms, vanishes })
}

#[derive(Clone, Debug)]
enum FormVal {
    Func(RatFunc),
    Form(ReflexiveForm),
}

struct FormEval {
    field: FieldSpec,
}

fn mixed(msg: &str) -> Error {
    Error::Syntax { pos: 0, msg: msg.into() }
}

impl Evaluator for FormEval {
    type Value = FormVal;

    fn num(&self, n: u64) -> Result<FormVal> {
        let c = Polynomial::constant(self.field, GLOBAL, self.field.from_u64(n));
        Ok(FormVal::Func(RatFunc::from_poly(&c)))
    }

    fn var(&self, i: usize) -> Result<FormVal> {
        Ok(FormVal::Func(RatFunc::var(self.field, i)))
    }

    fn gen(&self) -> Result<FormVal> {
        let g = self.field.generator().ok_or_else(|| Error::UnknownVariable { name: "a".into(), pos: 0 })?;
        Ok(FormVal::Func(RatFunc::from_poly(&Polynomial::constant(self.field, GLOBAL, g))))
    }

    fn diff(&self, v: FormVal) -> Result<FormVal> {
        match v {
            FormVal::Func(g) => Ok(FormVal::Form(ReflexiveForm::d(&g))),
            FormVal::Form(_) => Err(mixed("d of a 1-form is not supported")),
        }
    }

    fn add(&self, a: FormVal, b: FormVal) -> Result<FormVal> {
        match (a, b) {
            (FormVal::Func(a), FormVal::Func(b)) => Ok(FormVal::Func(a.add(&b))),
            (FormVal::Form(a), FormVal::Form(b)) => Ok(FormVal::Form(a.add(&b))),
            (FormVal::Func(g), FormVal::Form(w)) | (FormVal::Form(w), FormVal::Func(g)) if g.is_zero() => {
                Ok(FormVal::Form(w))
            }
            _ => Err(mixed("cannot add a function and a 1-form")),
        }
    }

    fn neg(&self, a: FormVal) -> Result<FormVal> {
        Ok(match a {
            FormVal::Func(g) => FormVal::Func(g.neg()),
            FormVal::Form(w) => FormVal::Form(w.neg()),
        })
    }

    fn mul(&self, a: FormVal, b: FormVal) -> Result<FormVal> {
        match (a, b) {
            (FormVal::Func(a), FormVal::Func(b)) => Ok(FormVal::Func(a.mul(&b))),
            (FormVal::Func(g), FormVal::Form(w)) | (FormVal::Form(w), FormVal::Func(g)) => {
                Ok(FormVal::Form(w.scale(&g)))
            }
            _ => Err(mixed("products of 1-forms are not supported")),
        }
    }

    fn div(&self, a: FormVal, b: FormVal) -> Result<FormVal> {
        let FormVal::Func(b) = b else {
            return Err(mixed("cannot divide by a 1-form"));
        };
        let inv = b.inv()?;
        self.mul(a, FormVal::Func(inv))
    }

    fn pow(&self, a: FormVal, e: i64) -> Result<FormVal> {
        match a {
            FormVal::Func(g) => Ok(FormVal::Func(g.pow(e)?)),
            FormVal::Form(_) => Err(mixed("powers of 1-forms are not supported")),
        }
    }
}

/// Parse a rational function such as `w^2/(u*(u+1))`.
pub fn parse_ratfunc(src: &str, field: FieldSpec) -> Result<RatFunc> {
    match eval(&FormEval { field }, &parse_expr(src, true)?)? {
        FormVal::Func(g) => Ok(g),
        FormVal::Form(_) => Err(mixed("expected a function, found a 1-form")),
    }
}

/// Parse a 1-form such as `y^-2*d(x)` or `d(x*y)/(x*y)`.
pub fn parse_form(src: &str, field: FieldSpec) -> Result<ReflexiveForm> {
    match eval(&FormEval { field }, &parse_expr(src, true)?)? {
        FormVal::Form(w) => Ok(w),
        FormVal::Func(g) if g.is_zero() => Ok(ReflexiveForm::zero(field)),
        FormVal::Func(_) => Err(mixed("expected a 1-form, found a function")),
    }
}

#[cfg(test)]
mod tests;

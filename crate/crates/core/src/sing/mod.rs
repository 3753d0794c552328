//! Verdicts for a hypersurface germ `{f = 0}` at the origin: F-purity by
//! Fedder's criterion, the tangent module `T_X = {v : v(f) in (f)}` with a
//! minimal generating set, freeness and isolatedness.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{jacobian, Monomial, MonomialOrder, Polynomial, VectorPoly};
use crate::stdbasis::{self, minimal_generators, reduce_mod, syz, GeneratorSet, Ring, StdOptions};

const LOCAL: MonomialOrder = MonomialOrder::LocalNegDegRevLex;
const AXES: [&str; 3] = ["d/dx", "d/dy", "d/dz"];

/// The derivation `a*d/dx + b*d/dy + c*d/dz`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub coeffs: VectorPoly,
}

impl Derivation {
    pub fn new(coeffs: VectorPoly) -> Derivation {
        assert_eq!(coeffs.rank(), 3, "a derivation has three coefficients");
        Derivation { coeffs }
    }

    /// Parse the three coefficients.
    pub fn parse(a: &str, b: &str, c: &str, field: crate::field::FieldSpec) -> Result<Derivation> {
        let comps = [a, b, c].iter().map(|s| crate::poly::parse(s, field, LOCAL)).collect::<Result<Vec<_>>>()?;
        Ok(Derivation::new(VectorPoly::new(comps)))
    }

    /// `v(g) = a*g_x + b*g_y + c*g_z`.
    pub fn apply(&self, g: &Polynomial) -> Polynomial {
        let grad = jacobian(&g.with_order(self.coeffs.order()));
        self.coeffs.dot(grad.components())
    }

    pub fn coefficient_strings(&self) -> [String; 3] {
        let c = self.coeffs.components();
        [c[0].to_string(), c[1].to_string(), c[2].to_string()]
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, axis) in self.coeffs.components().iter().zip(AXES) {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if c.len() == 1 => (true, rest.to_string()),
                _ => (false, s),
            };
            let piece = if body == "1" {
                axis.to_string()
            } else if c.len() > 1 {
                format!("({body})*{axis}")
            } else {
                format!("{body}*{axis}")
            };
            match (out.is_empty(), neg) {
                (true, false) => out.push_str(&piece),
                (true, true) => out.push_str(&format!("-{piece}")),
                (false, false) => out.push_str(&format!(" + {piece}")),
                (false, true) => out.push_str(&format!(" - {piece}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

fn at_origin(f: &Polynomial) -> Result<()> {
    if f.constant_term().is_zero() {
        Ok(())
    } else {
        Err(Error::NotAtOrigin)
    }
}

/// Fedder's criterion: `f^(p-1)` has a monomial with every exponent of
/// `x, y, z` below `p`.
pub fn is_f_pure(f: &Polynomial) -> Result<bool> {
    at_origin(f)?;
    let p = f.field().characteristic() as u16;
    let keep = |m: &Monomial| (0..3).all(|i| m.exponent(i) < p);
    Ok(!f.pow_filtered(p as u32 - 1, keep).is_zero())
}

/// True if the gradient does not vanish at the origin.
pub fn is_smooth(f: &Polynomial) -> Result<bool> {
    at_origin(f)?;
    Ok(jacobian(f).components().iter().any(|c| !c.constant_term().is_zero()))
}

/// Minimal generating set of `T_X` over the local ring of `{f = 0}` at the
/// origin. Coefficients are reduced modulo `f`; the order is by descending
/// leading term, so the output is deterministic.
pub fn tangent_module(f: &Polynomial, opts: StdOptions) -> Result<Vec<Derivation>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    at_origin(f)?;
    let f = f.with_order(LOCAL);
    let ring = Ring::quotient(&f, LOCAL);
    let jac = GeneratorSet::ideal(ring, jacobian(&f).into_components());
    let relations = syz(&jac, opts)?;
    let minimal = minimal_generators(&relations, opts)?;
    let mut gens: Vec<VectorPoly> = minimal.elems.iter().map(|v| reduce_mod(v, &f)).collect();
    gens.sort_by(|a, b| lead_key(b).cmp(&lead_key(a)));
    Ok(gens.into_iter().map(Derivation::new).collect())
}

/// Sort key realizing the local position-over-term comparison used for
/// output: earliest nonzero component from the back, then its leading
/// monomial.
fn lead_key(v: &VectorPoly) -> (usize, std::cmp::Reverse<u32>, [std::cmp::Reverse<u16>; 6]) {
    for (i, c) in v.components().iter().enumerate().rev() {
        if let Some(m) = c.leading_monomial() {
            let mut ex = [std::cmp::Reverse(0u16); 6];
            for (k, e) in ex.iter_mut().enumerate() {
                *e = std::cmp::Reverse(m.exponent(k));
            }
            return (i, std::cmp::Reverse(m.degree()), ex);
        }
    }
    (0, std::cmp::Reverse(u32::MAX), [std::cmp::Reverse(u16::MAX); 6])
}

/// `T_X` is free iff it needs exactly two generators.
pub fn is_tangent_free(f: &Polynomial, opts: StdOptions) -> Result<bool> {
    Ok(tangent_module(f, opts)?.len() == 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LzVerdict {
    Smooth,
    SatisfiesLZ,
    ViolatesLZ,
}

pub fn lz_verdict(f: &Polynomial, opts: StdOptions) -> Result<LzVerdict> {
    if is_smooth(f)? {
        return Ok(LzVerdict::Smooth);
    }
    Ok(if is_tangent_free(f, opts)? { LzVerdict::ViolatesLZ } else { LzVerdict::SatisfiesLZ })
}

/// True if `(f, f_x, f_y, f_z)` is primary to the maximal ideal at the
/// origin: every variable has a pure power among the leading monomials of
/// a local standard basis.
pub fn check_isolated(f: &Polynomial) -> bool {
    let f = f.with_order(LOCAL);
    let mut gens = vec![f.clone()];
    gens.extend(jacobian(&f).into_components());
    let ring = Ring::new(f.field(), LOCAL);
    let Ok(sb) = stdbasis::std(&GeneratorSet::ideal(ring, gens), StdOptions::default()) else {
        return false;
    };
    let leads: Vec<Monomial> = sb.leading_monomials().into_iter().map(|(m, _)| m).collect();
    if leads.iter().any(|m| m.is_one()) {
        return true;
    }
    (0..3).all(|i| leads.iter().any(|m| m.pure_power_var() == Some(i)))
}

/// Equality of the submodules of `R^3` spanned by two sets of derivations,
/// `R` the local ring of `{f = 0}` at the origin.
pub fn derivations_equal(f: &Polynomial, a: &[Derivation], b: &[Derivation], opts: StdOptions) -> Result<bool> {
    let ring = Ring::quotient(f, LOCAL);
    let va: Vec<VectorPoly> = a.iter().map(|d| d.coeffs.clone()).collect();
    let vb: Vec<VectorPoly> = b.iter().map(|d| d.coeffs.clone()).collect();
    stdbasis::modules_equal(&ring, 3, &va, &vb, opts)
}

/// Everything computed for one germ.
#[derive(Clone, Debug)]
pub struct GermReport {
    pub f: Polynomial,
    pub p: u32,
    pub f_pure: bool,
    pub tangent_generators: Vec<Derivation>,
    pub min_gen_count: usize,
    pub tangent_free: bool,
    pub singular_at_origin: bool,
    pub isolated: bool,
}

impl GermReport {
    pub fn verdict(&self) -> LzVerdict {
        match (self.singular_at_origin, self.tangent_free) {
            (false, _) => LzVerdict::Smooth,
            (true, true) => LzVerdict::ViolatesLZ,
            (true, false) => LzVerdict::SatisfiesLZ,
        }
    }

    /// JSON document `{characteristic, extension, f, f_pure, isolated,
    /// tangent: {free, min_generators, generators}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<[String; 3]> = self.tangent_generators.iter().map(Derivation::coefficient_strings).collect();
        serde_json::json!({
            "characteristic": self.p,
            "extension": self.f.field().min_poly_string(),
            "f": self.f.to_string(),
            "f_pure": self.f_pure,
            "isolated": self.isolated,
            "tangent": {
                "free": self.tangent_free,
                "min_generators": self.min_gen_count,
                "generators": gens,
            },
        })
    }
}

pub fn analyze(f: &Polynomial, opts: StdOptions) -> Result<GermReport> {
    let f_pure = is_f_pure(f)?;
    let singular_at_origin = !is_smooth(f)?;
    let tangent_generators = tangent_module(f, opts)?;
    let min_gen_count = tangent_generators.len();
    Ok(GermReport {
        f: f.clone(),
        p: f.field().characteristic(),
        f_pure,
        min_gen_count,
        tangent_free: min_gen_count == 2,
        tangent_generators,
        singular_at_origin,
        isolated: check_isolated(f),
    })
}

/// [`analyze`] over many germs in parallel; results keep the input order.
pub fn analyze_batch(fs: &[Polynomial], opts: StdOptions) -> Vec<Result<GermReport>> {
    fs.par_iter().map(|f| analyze(f, opts)).collect()
}

#[cfg(test)]
mod tests;

//! Rational double points in positive characteristic: normal forms by
//! characteristic and coindex, published verdicts, dual graphs and
//! tameness, and the exceptional lists.

mod graph;

pub use graph::{not_tame, DualGraph};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{is_prime, FieldSpec};
use crate::poly::{parse, MonomialOrder, Polynomial};
use crate::sing;
use crate::stdbasis::StdOptions;

pub const SCHEMA: &str = "lzsing-catalog/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AdeType {
    A,
    D,
    E,
}

impl FromStr for AdeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<AdeType> {
        match s.trim() {
            "A" | "a" => Ok(AdeType::A),
            "D" | "d" => Ok(AdeType::D),
            "E" | "e" => Ok(AdeType::E),
            other => Err(Error::OutOfRange(format!("unknown ADE type {other:?}"))),
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdeType::A => "A",
            AdeType::D => "D",
            AdeType::E => "E",
        })
    }
}

/// Published verdicts for one normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Literature {
    pub f_pure: bool,
    pub almost_equivariant: bool,
    pub lz_holds: bool,
}

const YES: Literature = Literature { f_pure: true, almost_equivariant: true, lz_holds: true };

const fn lit(f_pure: bool, almost_equivariant: bool, lz_holds: bool) -> Literature {
    Literature { f_pure, almost_equivariant, lz_holds }
}

/// One normal form of a rational double point.
///
/// `n` is the total index (the 7 of `D_7`); `r` the coindex when the
/// characteristic has several forms. `template` uses `{k}`, `{k+1}`,
/// `{k-1}`, `{k-r}` for the family parameter `k` (`n` for `A_n` and the
/// classical `D_n`, `n/2` resp. `(n-1)/2` for `D` in characteristic 2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RdpDescriptor {
    pub ade_type: AdeType,
    pub n: u32,
    pub r: Option<u32>,
    pub p: u32,
    pub template: &'static str,
    pub literature: Literature,
}

impl RdpDescriptor {
    pub fn name(&self) -> String {
        match self.r {
            Some(r) => format!("{}_{}^{}", self.ade_type, self.n, r),
            None => format!("{}_{}", self.ade_type, self.n),
        }
    }

    /// The family parameter substituted into the template.
    pub fn param(&self) -> u32 {
        match (self.ade_type, self.p) {
            (AdeType::D, 2) => self.n / 2,
            _ => self.n,
        }
    }

    pub fn equation_string(&self) -> String {
        let k = self.param() as i64;
        let r = self.r.unwrap_or(0) as i64;
        self.template
            .replace("{k+1}", &(k + 1).to_string())
            .replace("{k-1}", &(k - 1).to_string())
            .replace("{k-r}", &(k - r).to_string())
            .replace("{k}", &k.to_string())
    }

    pub fn field(&self) -> FieldSpec {
        FieldSpec::prime(self.p as u64).expect("catalog characteristics are prime")
    }

    pub fn dual_graph(&self) -> DualGraph {
        DualGraph { ade_type: self.ade_type, n: self.n }
    }
}

/// Polynomial of a descriptor over `F_p`, coefficients reduced mod `p`.
pub fn equation(d: &RdpDescriptor) -> Result<Polynomial> {
    let valid = lookup(d.ade_type, d.n, d.r, d.p)?;
    parse(&valid.equation_string(), valid.field(), MonomialOrder::LocalNegDegRevLex)
}

fn check_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as u64))
    }
}

fn wrong(p: u32, what: String) -> Error {
    Error::WrongCharacteristic { p, what }
}

/// The descriptor for type, total index, coindex and characteristic.
pub fn lookup(t: AdeType, n: u32, r: Option<u32>, p: u32) -> Result<RdpDescriptor> {
    check_prime(p)?;
    let name = match r {
        Some(r) => format!("{t}_{n}^{r}"),
        None => format!("{t}_{n}"),
    };
    let d = |template, literature| RdpDescriptor { ade_type: t, n, r, p, template, literature };
    match t {
        AdeType::A => {
            if n < 1 {
                return Err(Error::OutOfRange(format!("{name}: A_n needs n >= 1")));
            }
            if r.is_some() {
                return Err(wrong(p, format!("{name}: A_n has no coindex")));
            }
            Ok(d("x*y+z^{k+1}", lit(true, true, (n + 1) % p != 0)))
        }
        AdeType::D if p == 2 => {
            if n < 4 {
                return Err(Error::OutOfRange(format!("{name}: D_n needs n >= 4")));
            }
            let Some(r) = r else {
                return Err(wrong(p, format!("{name}: characteristic 2 needs a coindex")));
            };
            let k = n / 2;
            if r > k - 1 {
                return Err(Error::OutOfRange(format!("{name}: coindex must be at most {}", k - 1)));
            }
            let top = r == k - 1;
            Ok(match (n % 2 == 0, r) {
                (true, 0) => d("z^2+x^2*y+x*y^{k}", lit(false, false, false)),
                (true, _) => d("z^2+x^2*y+x*y^{k}+x*y^{k-r}*z", lit(top, false, false)),
                (false, 0) => d("z^2+x^2*y+y^{k}*z", lit(false, false, false)),
                (false, _) if top => d("z^2+x^2*y+y^{k}*z+x*y^{k-r}*z", YES),
                (false, _) => d("z^2+x^2*y+y^{k}*z+x*y^{k-r}*z", lit(false, false, true)),
            })
        }
        AdeType::D => {
            if n < 4 {
                return Err(Error::OutOfRange(format!("{name}: D_n needs n >= 4")));
            }
            if r.is_some() {
                return Err(wrong(p, format!("{name}: only the classical form occurs")));
            }
            Ok(d("z^2+x^2*y+y^{k-1}", YES))
        }
        AdeType::E => {
            if !(6..=8).contains(&n) {
                return Err(Error::OutOfRange(format!("{name}: E_n needs 6 <= n <= 8")));
            }
            let row = e_row(n, r, p).ok_or_else(|| wrong(p, format!("{name} does not occur")))?;
            Ok(d(row.0, row.1))
        }
    }
}

fn e_row(n: u32, r: Option<u32>, p: u32) -> Option<(&'static str, Literature)> {
    const NO: Literature = lit(false, false, false);
    let row = match (p, n, r) {
        (2, 6, Some(0)) => ("z^2+x^3+y^2*z", lit(false, true, false)),
        (2, 6, Some(1)) => ("z^2+x^3+y^2*z+x*y*z", YES),
        (2, 7, Some(0)) => ("z^2+x^3+x*y^3", NO),
        (2, 7, Some(1)) => ("z^2+x^3+x*y^3+x^2*y*z", NO),
        (2, 7, Some(2)) => ("z^2+x^3+x*y^3+y^3*z", NO),
        (2, 7, Some(3)) => ("z^2+x^3+x*y^3+x*y*z", YES),
        (2, 8, Some(0)) => ("z^2+x^3+y^5", NO),
        (2, 8, Some(1)) => ("z^2+x^3+y^5+x*y^3*z", NO),
        (2, 8, Some(2)) => ("z^2+x^3+y^5+x*y^2*z", NO),
        (2, 8, Some(3)) => ("z^2+x^3+y^5+y^3*z", lit(false, true, true)),
        (2, 8, Some(4)) => ("z^2+x^3+y^5+x*y*z", YES),
        (3, 6, Some(0)) => ("z^2+x^3+y^4", NO),
        (3, 6, Some(1)) => ("z^2+x^3+y^4+x^2*y^2", YES),
        (3, 7, Some(0)) => ("z^2+x^3+x*y^3", lit(false, true, false)),
        (3, 7, Some(1)) => ("z^2+x^3+x*y^3+x^2*y^2", YES),
        (3, 8, Some(0)) => ("z^2+x^3+y^5", NO),
        (3, 8, Some(1)) => ("z^2+x^3+y^5+x^2*y^3", lit(false, true, true)),
        (3, 8, Some(2)) => ("z^2+x^3+y^5+x^2*y^2", YES),
        (5, 6, None) => ("z^2+x^3+y^4", YES),
        (5, 7, None) => ("z^2+x^3+x*y^3", YES),
        (5, 8, Some(0)) => ("z^2+x^3+y^5", lit(false, true, false)),
        (5, 8, Some(1)) => ("z^2+x^3+y^5+x*y^4", YES),
        (p, 6, None) if p >= 7 => ("z^2+x^3+y^4", YES),
        (p, 7, None) if p >= 7 => ("z^2+x^3+x*y^3", YES),
        (p, 8, None) if p >= 7 => ("z^2+x^3+y^5", YES),
        _ => return None,
    };
    Some(row)
}

/// All normal forms in characteristic `p` whose family parameter is at most
/// `max_n`: `A_n` for `n <= max_n`; in characteristic 2 every `D_{2k}^r`
/// and `D_{2k+1}^r` with `2 <= k <= max_n`; otherwise the classical `D_n`
/// with `4 <= n <= max_n`; then the `E` forms.
pub fn entries(p: u32, max_n: u32) -> Result<Vec<RdpDescriptor>> {
    check_prime(p)?;
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(lookup(AdeType::A, n, None, p)?);
    }
    if p == 2 {
        for k in 2..=max_n {
            for n in [2 * k, 2 * k + 1] {
                for r in 0..k {
                    out.push(lookup(AdeType::D, n, Some(r), p)?);
                }
            }
        }
    } else {
        for n in 4..=max_n {
            out.push(lookup(AdeType::D, n, None, p)?);
        }
    }
    for n in 6..=8 {
        for r in [None, Some(0), Some(1), Some(2), Some(3), Some(4)] {
            if let Ok(d) = lookup(AdeType::E, n, r, p) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// Classes `(type, n, p)` where a free tangent module is possible.
pub fn in_lz_exception_list(t: AdeType, n: u32, p: u32) -> bool {
    match t {
        AdeType::A => (n + 1) % p == 0,
        AdeType::D => n >= 4 && p == 2,
        AdeType::E => match n {
            6 | 7 => p == 2 || p == 3,
            8 => p == 2 || p == 3 || p == 5,
            _ => false,
        },
    }
}

/// Classes where logarithmic extension of 1-forms may fail.
pub fn in_log_ext_exception_list(t: AdeType, n: u32, p: u32) -> bool {
    t != AdeType::A && in_lz_exception_list(t, n, p)
}

/// The seven tame normal forms with a free tangent module.
pub fn corollary_exceptions() -> Vec<RdpDescriptor> {
    [(6, 0, 2), (8, 0, 2), (8, 1, 2), (8, 2, 2), (7, 0, 3), (8, 0, 3), (8, 0, 5)]
        .iter()
        .map(|&(n, r, p)| lookup(AdeType::E, n, Some(r), p).expect("catalog entry"))
        .collect()
}

/// Normal forms known to have a free tangent module, with family parameter
/// at most `max_n` for `A` and `D`.
pub fn free_tangent_witnesses(p: u32, max_n: u32) -> Result<Vec<RdpDescriptor>> {
    check_prime(p)?;
    let mut out = Vec::new();
    for n in 1..=max_n {
        if (n + 1) % p == 0 {
            out.push(lookup(AdeType::A, n, None, p)?);
        }
    }
    if p == 2 {
        for k in 2..=max_n {
            out.push(lookup(AdeType::D, 2 * k, Some(0), p)?);
            out.push(lookup(AdeType::D, 2 * k + 1, Some(0), p)?);
        }
    }
    if p <= 5 {
        for n in 6..=8 {
            if in_lz_exception_list(AdeType::E, n, p) {
                out.push(lookup(AdeType::E, n, Some(0), p)?);
            }
        }
    }
    Ok(out)
}

/// Values computed for one descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Computed {
    pub f_pure: bool,
    pub min_gens: usize,
    pub tangent_free: bool,
}

impl Computed {
    pub fn lz_holds(&self) -> bool {
        !self.tangent_free
    }
}

pub fn compute(d: &RdpDescriptor, opts: StdOptions) -> Result<Computed> {
    let f = equation(d)?;
    let gens = sing::tangent_module(&f, opts)?;
    Ok(Computed { f_pure: sing::is_f_pure(&f)?, min_gens: gens.len(), tangent_free: gens.len() == 2 })
}

/// [`compute`] for many descriptors in parallel, in input order.
pub fn compute_all(ds: &[RdpDescriptor], opts: StdOptions) -> Result<Vec<Computed>> {
    ds.par_iter().map(|d| compute(d, opts)).collect()
}

/// JSON document for the catalog at the given characteristics.
pub fn export_json(ps: &[u32], max_n: u32, opts: StdOptions) -> Result<serde_json::Value> {
    let mut rows = Vec::new();
    for &p in ps {
        let ds = entries(p, max_n)?;
        let computed = compute_all(&ds, opts)?;
        for (d, c) in ds.iter().zip(computed) {
            rows.push(serde_json::json!({
                "type": d.ade_type,
                "n": d.n,
                "r": d.r,
                "p": d.p,
                "name": d.name(),
                "equation": d.equation_string(),
                "literature": d.literature,
                "computed": c,
            }));
        }
    }
    Ok(serde_json::json!({ "schema": SCHEMA, "entries": rows }))
}

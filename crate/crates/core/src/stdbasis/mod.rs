//! Standard bases of ideals and submodules of free modules over `P = k[x..]`
//! and `R = P/(f)`, normal forms, syzygies and minimal generating sets over
//! the localization at the origin.
//!
//! Global orders run Buchberger's algorithm; the local order runs Mora's
//! variant. Quotient rings are handled by adjoining `f * e_i` for every
//! basis vector.

mod element;
mod engine;
mod minimal;

pub use element::ModuleOrder;
pub use engine::StdOptions;
pub use minimal::{has_unit_entries, minimal_generators};

use element::ModElem;
use engine::Engine;

use crate::error::Result;
use crate::field::FieldSpec;
use crate::poly::{MonomialOrder, Polynomial, VectorPoly};

/// Ambient ring: `P` or `P/(f)` with a monomial order.
#[derive(Clone, Debug)]
pub struct Ring {
    pub field: FieldSpec,
    pub order: MonomialOrder,
    pub quotient: Option<Polynomial>,
}

impl Ring {
    pub fn new(field: FieldSpec, order: MonomialOrder) -> Ring {
        Ring { field, order, quotient: None }
    }

    pub fn quotient(f: &Polynomial, order: MonomialOrder) -> Ring {
        Ring { field: f.field(), order, quotient: Some(f.with_order(order)) }
    }

    pub fn is_local(&self) -> bool {
        !self.order.is_global()
    }

    fn module_order(&self) -> ModuleOrder {
        ModuleOrder::top(self.order)
    }

    /// The generators `f * e_i` of `f * P^rank`, empty without a quotient.
    fn quotient_gens(&self, rank: usize) -> Vec<VectorPoly> {
        match &self.quotient {
            None => Vec::new(),
            Some(f) => (0..rank)
                .map(|i| {
                    let mut comps = vec![Polynomial::zero(self.field, self.order); rank];
                    comps[i] = f.clone();
                    VectorPoly::new(comps)
                })
                .collect(),
        }
    }
}

/// Generators of an ideal (rank 1) or a submodule of `R^rank`.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub ring: Ring,
    pub rank: usize,
    pub elems: Vec<VectorPoly>,
}

impl GeneratorSet {
    pub fn module(ring: Ring, rank: usize, elems: Vec<VectorPoly>) -> GeneratorSet {
        assert!(elems.iter().all(|e| e.rank() == rank), "generator rank mismatch");
        let elems = elems.into_iter().map(|e| e.with_order(ring.order)).collect();
        GeneratorSet { ring, rank, elems }
    }

    pub fn ideal(ring: Ring, polys: Vec<Polynomial>) -> GeneratorSet {
        let elems = polys.into_iter().map(|p| VectorPoly::new(vec![p])).collect();
        Self::module(ring, 1, elems)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct StandardBasis {
    ring: Ring,
    rank: usize,
    order: ModuleOrder,
    elems: Vec<ModElem>,
}

impl StandardBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn gens(&self) -> Vec<VectorPoly> {
        self.elems.iter().map(|e| e.to_vector(self.ring.field, self.ring.order, self.rank, 0)).collect()
    }

    /// Leading monomials, with their component index.
    pub fn leading_monomials(&self) -> Vec<(crate::poly::Monomial, usize)> {
        self.elems.iter().map(|e| (e.lead().0, e.lead().1 as usize)).collect()
    }

    /// Ideal generators (rank 1 only).
    pub fn polys(&self) -> Vec<Polynomial> {
        assert_eq!(self.rank, 1, "not an ideal");
        self.gens().into_iter().map(|v| v.into_components().remove(0)).collect()
    }

    fn engine(&self, opts: StdOptions) -> Engine {
        Engine::new(self.ring.field, self.order, opts)
    }
}

/// Standard basis of the ideal or submodule generated by `g`, over the
/// quotient ring when one is attached.
pub fn std(g: &GeneratorSet, opts: StdOptions) -> Result<StandardBasis> {
    let ord = g.ring.module_order();
    let mut gens: Vec<ModElem> = g.elems.iter().map(|e| ModElem::from_vector(e, 0, &ord)).collect();
    gens.extend(g.ring.quotient_gens(g.rank).iter().map(|e| ModElem::from_vector(e, 0, &ord)));
    let elems = Engine::new(g.ring.field, ord, opts).std(gens)?;
    Ok(StandardBasis { ring: g.ring.clone(), rank: g.rank, order: ord, elems })
}

/// Normal form of `v` against `b`: fully reduced under a global order, a
/// weak (Mora) normal form under the local order. Zero iff `v` lies in the
/// module (respectively its localization at the origin).
pub fn normal_form(v: &VectorPoly, b: &StandardBasis) -> VectorPoly {
    assert_eq!(v.rank(), b.rank, "rank mismatch");
    let h = ModElem::from_vector(&v.with_order(b.ring.order), 0, &b.order);
    let r = b.engine(StdOptions::default()).reduce(h, &b.elems, true);
    r.to_vector(b.ring.field, b.ring.order, b.rank, 0)
}

pub fn normal_form_poly(g: &Polynomial, b: &StandardBasis) -> Polynomial {
    normal_form(&VectorPoly::new(vec![g.clone()]), b).into_components().remove(0)
}

/// Membership of `v` in the submodule spanned by `b`.
pub fn contains(b: &StandardBasis, v: &VectorPoly) -> bool {
    normal_form(v, b).is_zero()
}

/// Generators of the syzygy module `{c : sum c_i g_i = 0}` of `g` over its
/// ring. Over `P/(f)` the relation only has to hold modulo `f`: the
/// generators `f * e_j` are appended, syzygies are computed over `P` and
/// projected back to the first `g.len()` coordinates.
///
/// The computation always runs under the global order; syzygies over `P`
/// also generate the syzygies over the localization.
pub fn syz(g: &GeneratorSet, opts: StdOptions) -> Result<GeneratorSet> {
    let n = g.elems.len();
    if n == 0 {
        return Ok(GeneratorSet::module(g.ring.clone(), 1, Vec::new()));
    }
    let glob = MonomialOrder::GlobalDegRevLex;
    let mut all: Vec<VectorPoly> = g.elems.iter().map(|e| e.with_order(glob)).collect();
    all.extend(g.ring.quotient_gens(g.rank).iter().map(|e| e.with_order(glob)));
    let raw = syz_over_polynomial_ring(g.ring.field, glob, g.rank, &all, opts)?;
    let mut out: Vec<VectorPoly> = Vec::new();
    for v in raw {
        let proj = VectorPoly::new(v.into_components().into_iter().take(n).collect());
        let proj = match &g.ring.quotient {
            Some(f) => reduce_mod(&proj, f),
            None => proj,
        };
        if !proj.is_zero() && !out.contains(&proj) {
            out.push(proj);
        }
    }
    Ok(GeneratorSet::module(g.ring.clone(), n, out))
}

/// Syzygies over the polynomial ring by tagging: `g_i + e_{s+i}` under an
/// order that eliminates the first `s` components.
fn syz_over_polynomial_ring(
    field: FieldSpec,
    order: MonomialOrder,
    rank: usize,
    gens: &[VectorPoly],
    opts: StdOptions,
) -> Result<Vec<VectorPoly>> {
    let s = rank as u16;
    let ord = ModuleOrder { base: order, split: Some(s) };
    let tagged: Vec<ModElem> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut t = ModElem::from_vector(g, 0, &ord).terms;
            t.push((crate::poly::Monomial::ONE, s + i as u16, field.one()));
            ModElem::from_terms(t, field, &ord)
        })
        .collect();
    let basis = Engine::new(field, ord, opts).std(tagged)?;
    Ok(basis
        .into_iter()
        .filter(|b| b.lead().1 >= s)
        .map(|b| b.to_vector(field, order, gens.len(), s))
        .collect())
}

/// Remainder of every component modulo `f` under degrevlex; the class in
/// `P/(f)` is unchanged.
pub fn reduce_mod(v: &VectorPoly, f: &Polynomial) -> VectorPoly {
    let glob = MonomialOrder::GlobalDegRevLex;
    let fg = f.with_order(glob);
    let ring = Ring::new(f.field(), glob);
    let ord = ring.module_order();
    let basis = vec![ModElem::from_vector(&VectorPoly::new(vec![fg]), 0, &ord)];
    let eng = Engine::new(f.field(), ord, StdOptions::default());
    let comps = v
        .components()
        .iter()
        .map(|c| {
            let h = ModElem::from_vector(&VectorPoly::new(vec![c.with_order(glob)]), 0, &ord);
            eng.reduce(h, &basis, true).to_vector(f.field(), glob, 1, 0).into_components().remove(0).with_order(v.order())
        })
        .collect();
    VectorPoly::new(comps)
}

/// Membership of `v` in the submodule of `R^rank` spanned by `gens`, after
/// localizing at the origin when the ring order is local.
///
/// Locally, `v` lies in the module iff some syzygy of `(v, gens)` has a
/// unit in the slot of `v`; it suffices to inspect the constant terms of a
/// generating set of syzygies, which is computed under the global order.
pub fn module_contains(ring: &Ring, rank: usize, gens: &[VectorPoly], v: &VectorPoly, opts: StdOptions) -> Result<bool> {
    if !ring.is_local() {
        let sb = std(&GeneratorSet::module(ring.clone(), rank, gens.to_vec()), opts)?;
        return Ok(contains(&sb, v));
    }
    if v.is_zero() {
        return Ok(true);
    }
    let mut all = vec![v.clone()];
    all.extend(gens.iter().cloned());
    let relations = syz(&GeneratorSet::module(ring.clone(), rank, all), opts)?;
    Ok(relations.elems.iter().any(|s| !s.component(0).constant_term().is_zero()))
}

/// Equality of the submodules of `R^rank` (localized when the ring order is
/// local) spanned by `a` and `b`, by mutual membership.
pub fn modules_equal(ring: &Ring, rank: usize, a: &[VectorPoly], b: &[VectorPoly], opts: StdOptions) -> Result<bool> {
    for v in a {
        if !module_contains(ring, rank, b, v, opts)? {
            return Ok(false);
        }
    }
    for v in b {
        if !module_contains(ring, rank, a, v, opts)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;

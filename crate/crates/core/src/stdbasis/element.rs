use std::cmp::Ordering;

use crate::field::{FieldElement, FieldSpec};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VectorPoly};

/// Term-over-position order on module monomials `m * e_i`.
///
/// With `split = Some(s)`, every component `< s` ranks above every
/// component `>= s` regardless of the monomial; this is the elimination
/// order used to read off syzygies from tagged generators. Inside a block,
/// the monomial is compared first and lower component indices win ties.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub split: Option<u16>,
}

impl ModuleOrder {
    pub fn top(base: MonomialOrder) -> ModuleOrder {
        ModuleOrder { base, split: None }
    }

    #[inline]
    pub fn cmp(&self, a: &(Monomial, u16), b: &(Monomial, u16)) -> Ordering {
        if let Some(s) = self.split {
            let (ba, bb) = (a.1 >= s, b.1 >= s);
            if ba != bb {
                return if ba { Ordering::Less } else { Ordering::Greater };
            }
        }
        self.base.cmp(&a.0, &b.0).then_with(|| b.1.cmp(&a.1))
    }
}

pub(crate) type Term = (Monomial, u16, FieldElement);

/// Module element in sparse form, terms sorted descending by a [`ModuleOrder`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ModElem {
    pub terms: Vec<Term>,
}

impl ModElem {
    pub fn zero() -> ModElem {
        ModElem { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    pub fn lead_key(&self) -> (Monomial, u16) {
        let t = &self.terms[0];
        (t.0, t.1)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn ecart(&self) -> u32 {
        if self.terms.is_empty() {
            return 0;
        }
        self.max_degree() - self.terms[0].0.degree()
    }

    pub fn from_terms(mut terms: Vec<Term>, field: FieldSpec, ord: &ModuleOrder) -> ModElem {
        terms.sort_by(|a, b| ord.cmp(&(b.0, b.1), &(a.0, a.1)));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == t.0 && last.1 == t.1 {
                    last.2 = field.add(last.2, t.2);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.2.is_zero());
        ModElem { terms: out }
    }

    pub fn from_vector(v: &VectorPoly, offset: u16, ord: &ModuleOrder) -> ModElem {
        let field = v.field();
        let mut terms = Vec::new();
        for (i, c) in v.components().iter().enumerate() {
            for &(m, k) in c.terms() {
                terms.push((m, i as u16 + offset, k));
            }
        }
        Self::from_terms(terms, field, ord)
    }

    pub fn to_vector(&self, field: FieldSpec, order: MonomialOrder, rank: usize, offset: u16) -> VectorPoly {
        let mut comps: Vec<Vec<(Monomial, FieldElement)>> = vec![Vec::new(); rank];
        for &(m, i, c) in &self.terms {
            let idx = (i - offset) as usize;
            comps[idx].push((m, c));
        }
        VectorPoly::new(comps.into_iter().map(|t| Polynomial::from_terms(field, order, t)).collect())
    }

    pub fn scale(&mut self, field: FieldSpec, c: FieldElement) {
        for t in &mut self.terms {
            t.2 = field.mul(t.2, c);
        }
    }

    pub fn make_monic(&mut self, field: FieldSpec) {
        if let Some(lc) = self.terms.first().map(|t| t.2) {
            if !lc.is_one() {
                let inv = field.inv(lc).expect("nonzero leading coefficient");
                self.scale(field, inv);
            }
        }
    }

    /// `self - c * m * g`, merging in order.
    pub fn sub_mul(&self, g: &ModElem, m: &Monomial, c: FieldElement, field: FieldSpec, ord: &ModuleOrder) -> ModElem {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &g.terms;
        let shifted = |t: &Term| (t.0.mul(m), t.1, field.neg(field.mul(c, t.2)));
        while i < a.len() && j < b.len() {
            let bt = shifted(&b[j]);
            match ord.cmp(&(a[i].0, a[i].1), &(bt.0, bt.1)) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(bt);
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(a[i].2, bt.2);
                    if !s.is_zero() {
                        out.push((a[i].0, a[i].1, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        while j < b.len() {
            out.push(shifted(&b[j]));
            j += 1;
        }
        ModElem { terms: out }
    }

    pub fn max_position(&self) -> Option<u16> {
        self.terms.iter().map(|t| t.1).max()
    }
}

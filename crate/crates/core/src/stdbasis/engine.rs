//! Buchberger's algorithm with Gebauer–Möller pair criteria. Under a global
//! order reductions are ordinary (full) reductions; under a local order the
//! normal form is Mora's, which picks the reducer of smallest ecart and
//! keeps intermediate remainders of larger ecart available as reducers.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Monomial;

use super::element::{ModElem, ModuleOrder};

#[derive(Clone, Copy, Debug)]
pub struct StdOptions {
    /// Maximum number of S-pairs processed by a single computation.
    pub pair_budget: usize,
}

impl Default for StdOptions {
    fn default() -> Self {
        StdOptions { pair_budget: 1_000_000 }
    }
}

pub(crate) struct Engine {
    pub field: FieldSpec,
    pub ord: ModuleOrder,
    pub opts: StdOptions,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: u16,
    deg: u32,
}

impl Engine {
    pub fn new(field: FieldSpec, ord: ModuleOrder, opts: StdOptions) -> Engine {
        Engine { field, ord, opts }
    }

    fn divides(g: &ModElem, key: &(Monomial, u16)) -> bool {
        let (m, pos, _) = g.lead();
        *pos == key.1 && m.divides(&key.0)
    }

    /// One reduction step: cancel the leading term of `h` with `g`.
    fn step(&self, h: &ModElem, g: &ModElem) -> ModElem {
        let f = self.field;
        let (hm, _, hc) = *h.lead();
        let (gm, _, gc) = *g.lead();
        let m = hm.div(&gm).expect("reducer divides leading term");
        let c = f.div(hc, gc).expect("nonzero leading coefficient");
        h.sub_mul(g, &m, c, f, &self.ord)
    }

    /// Normal form against `basis`. Global orders: full reduction when
    /// `full` (otherwise only the leading term is made irreducible).
    /// Local orders: Mora's weak normal form, i.e. `u * h` reduced for a
    /// unit `u` with `u(0) = 1`.
    pub fn reduce(&self, h: ModElem, basis: &[ModElem], full: bool) -> ModElem {
        if self.ord.base.is_global() {
            self.reduce_global(h, basis, full)
        } else {
            self.reduce_mora(h, basis)
        }
    }

    fn reduce_global(&self, mut h: ModElem, basis: &[ModElem], full: bool) -> ModElem {
        let mut done: Vec<(Monomial, u16, crate::field::FieldElement)> = Vec::new();
        loop {
            if h.is_zero() {
                break;
            }
            let key = h.lead_key();
            match basis.iter().find(|g| Self::divides(g, &key)) {
                Some(g) => h = self.step(&h, g),
                None => {
                    if !full {
                        break;
                    }
                    done.push(h.terms.remove(0));
                }
            }
        }
        if full {
            done.extend(h.terms);
            ModElem { terms: done }
        } else {
            h
        }
    }

    fn reduce_mora(&self, mut h: ModElem, basis: &[ModElem]) -> ModElem {
        let mut reducers: Vec<(ModElem, u32)> = Vec::new();
        let ecarts: Vec<u32> = basis.iter().map(ModElem::ecart).collect();
        loop {
            if h.is_zero() {
                return h;
            }
            let key = h.lead_key();
            // smallest ecart wins, ties go to the earliest basis element
            let mut best: Option<(u32, &ModElem)> = None;
            let candidates = basis.iter().zip(ecarts.iter().copied()).chain(reducers.iter().map(|(g, e)| (g, *e)));
            for (g, e) in candidates {
                if Self::divides(g, &key) && best.map_or(true, |b| e < b.0) {
                    best = Some((e, g));
                }
            }
            let Some((ecart_g, g)) = best else {
                return h;
            };
            let next = self.step(&h, g);
            let ecart_h = h.ecart();
            if ecart_g > ecart_h {
                reducers.push((h, ecart_h));
            }
            h = next;
        }
    }

    fn make_pair(&self, basis: &[ModElem], i: usize, j: usize) -> Option<Pair> {
        let (mi, pi, _) = *basis[i].lead();
        let (mj, pj, _) = *basis[j].lead();
        if pi != pj {
            return None;
        }
        let lcm = mi.lcm(&mj);
        Some(Pair { i, j, lcm, pos: pi, deg: lcm.degree() })
    }

    /// Standard basis of the submodule generated by `gens`.
    pub fn std(&self, gens: Vec<ModElem>) -> Result<Vec<ModElem>> {
        let rank_one = gens.iter().all(|g| g.max_position().unwrap_or(0) == 0);
        let mut basis: Vec<ModElem> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut input: Vec<ModElem> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        // cheapest generators first keeps intermediate growth down
        input.sort_by_key(|g| (g.lead().0.degree(), g.terms.len()));
        for g in input {
            let h = self.reduce(g, &basis, false);
            if !h.is_zero() {
                self.insert(&mut basis, &mut pairs, h, rank_one);
            }
        }
        let mut processed = 0usize;
        while !pairs.is_empty() {
            let (best, _) = pairs
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.deg.cmp(&b.1.deg).then(a.1.j.cmp(&b.1.j)).then(a.1.i.cmp(&b.1.i)))
                .expect("nonempty");
            let pair = pairs.swap_remove(best);
            processed += 1;
            if processed > self.opts.pair_budget {
                return Err(Error::ResourceLimit(self.opts.pair_budget));
            }
            let s = self.spoly(&basis[pair.i], &basis[pair.j]);
            let h = self.reduce(s, &basis, false);
            if !h.is_zero() {
                self.insert(&mut basis, &mut pairs, h, rank_one);
            }
        }
        Ok(self.minimalize(basis))
    }

    fn spoly(&self, a: &ModElem, b: &ModElem) -> ModElem {
        let f = self.field;
        let (ma, _, ca) = *a.lead();
        let (mb, _, cb) = *b.lead();
        let l = ma.lcm(&mb);
        let ua = l.div(&ma).expect("lcm");
        let ub = l.div(&mb).expect("lcm");
        let mut left = ModElem::zero();
        left = left.sub_mul(a, &ua, f.neg(f.inv(ca).expect("lc")), f, &self.ord);
        left.sub_mul(b, &ub, f.inv(cb).expect("lc"), f, &self.ord)
    }

    /// Add `h` to the basis and update the pair set (Gebauer–Möller).
    fn insert(&self, basis: &mut Vec<ModElem>, pairs: &mut Vec<Pair>, mut h: ModElem, rank_one: bool) {
        h.make_monic(self.field);
        let k = basis.len();
        basis.push(h);
        let (hm, hpos, _) = *basis[k].lead();

        // B: drop old pairs whose lcm is strictly divisible by the new lead
        pairs.retain(|p| {
            if p.pos != hpos || !hm.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].lead().0.lcm(&hm);
            let lj = basis[p.j].lead().0.lcm(&hm);
            li == p.lcm || lj == p.lcm
        });

        let mut fresh: Vec<(Pair, bool)> = (0..k)
            .filter_map(|i| self.make_pair(basis, i, k))
            .map(|p| {
                let coprime = rank_one && basis[p.i].lead().0.is_coprime(&hm);
                (p, coprime)
            })
            .collect();
        // M: drop (i,k) if some (j,k) has an lcm properly dividing it
        let lcms: Vec<Monomial> = fresh.iter().map(|p| p.0.lcm).collect();
        fresh = fresh
            .into_iter()
            .filter(|(p, _)| !lcms.iter().any(|l| *l != p.lcm && l.divides(&p.lcm)))
            .collect();
        // F: among equal lcms keep one; product criterion drops the class if
        // any member is coprime
        fresh.sort_by(|a, b| a.0.lcm.cmp(&b.0.lcm).then(a.0.i.cmp(&b.0.i)));
        let mut kept: Vec<Pair> = Vec::new();
        let mut idx = 0;
        while idx < fresh.len() {
            let mut end = idx + 1;
            while end < fresh.len() && fresh[end].0.lcm == fresh[idx].0.lcm {
                end += 1;
            }
            if !fresh[idx..end].iter().any(|(_, c)| *c) {
                kept.push(fresh[idx].0.clone());
            }
            idx = end;
        }
        pairs.extend(kept);
    }

    /// Drop elements whose leading term is divisible by another's.
    fn minimalize(&self, basis: Vec<ModElem>) -> Vec<ModElem> {
        let mut keep = vec![true; basis.len()];
        for i in 0..basis.len() {
            let ki = basis[i].lead_key();
            for j in 0..basis.len() {
                if i == j || !keep[j] {
                    continue;
                }
                let kj = basis[j].lead_key();
                if kj.1 == ki.1 && kj.0.divides(&ki.0) && (kj.0 != ki.0 || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut out: Vec<ModElem> =
            basis.into_iter().zip(keep).filter_map(|(b, k)| k.then_some(b)).collect();
        if self.ord.base.is_global() {
            // tail-reduce for a canonical (reduced) basis
            for i in 0..out.len() {
                let rest: Vec<ModElem> =
                    out.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, b)| b.clone()).collect();
                let lead = out[i].terms[0];
                let tail = ModElem { terms: out[i].terms[1..].to_vec() };
                let mut red = self.reduce(tail, &rest, true);
                red.terms.insert(0, lead);
                out[i] = red;
            }
        }
        out.sort_by(|a, b| self.ord.cmp(&b.lead_key(), &a.lead_key()));
        out
    }
}

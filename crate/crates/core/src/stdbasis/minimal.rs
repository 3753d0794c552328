use crate::error::Result;
use crate::field::{FieldElement, FieldSpec};

use super::{syz, GeneratorSet, StdOptions};

/// Minimal generating set of a submodule of `R^s` over the local ring at
/// the origin (Nakayama).
///
/// The syzygies of the generators are computed once. While some syzygy has
/// an entry that is a unit (nonzero constant term), the generator at the
/// first such entry of the first such syzygy is redundant and is dropped;
/// the remaining syzygies are updated by `s_k * t - t_k * s`, which keeps
/// them a generating set of the relations among the survivors. Only the
/// constant terms decide which entries are units, so the elimination runs
/// on the matrix of constant terms.
pub fn minimal_generators(m: &GeneratorSet, opts: StdOptions) -> Result<GeneratorSet> {
    let field = m.ring.field;
    if m.elems.is_empty() {
        return Ok(m.clone());
    }
    let relations = syz(m, opts)?;
    let n = m.elems.len();
    let mut rows: Vec<Vec<FieldElement>> = relations
        .elems
        .iter()
        .map(|r| r.components().iter().map(|c| c.constant_term()).collect())
        .filter(|row: &Vec<FieldElement>| row.iter().any(|c| !c.is_zero()))
        .collect();
    let mut alive = vec![true; n];
    while let Some((ri, k)) = first_unit(&rows, &alive) {
        alive[k] = false;
        let pivot = rows.remove(ri);
        for row in rows.iter_mut() {
            eliminate(field, row, &pivot, k);
        }
        rows.retain(|r| r.iter().zip(&alive).any(|(c, a)| *a && !c.is_zero()));
    }
    let elems = m.elems.iter().zip(&alive).filter(|(_, a)| **a).map(|(e, _)| e.clone()).collect();
    Ok(GeneratorSet { ring: m.ring.clone(), rank: m.rank, elems })
}

fn first_unit(rows: &[Vec<FieldElement>], alive: &[bool]) -> Option<(usize, usize)> {
    rows.iter().enumerate().find_map(|(ri, r)| {
        r.iter().enumerate().find(|(k, c)| alive[*k] && !c.is_zero()).map(|(k, _)| (ri, k))
    })
}

/// `row <- pivot_k * row - row_k * pivot`.
fn eliminate(field: FieldSpec, row: &mut [FieldElement], pivot: &[FieldElement], k: usize) {
    let (a, b) = (pivot[k], row[k]);
    for (x, y) in row.iter_mut().zip(pivot) {
        *x = field.sub(field.mul(a, *x), field.mul(b, *y));
    }
}

/// True if some syzygy of the generators has a unit entry, i.e. the set is
/// not minimal over the local ring.
pub fn has_unit_entries(m: &GeneratorSet, opts: StdOptions) -> Result<bool> {
    let relations = syz(m, opts)?;
    Ok(relations.elems.iter().any(|r| r.components().iter().any(|c| !c.constant_term().is_zero())))
}

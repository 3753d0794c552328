use serde::Serialize;

use super::AdeType;
use crate::error::{Error, Result};

/// Dual graph of the minimal resolution of an ADE singularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub ade_type: AdeType,
    pub n: u32,
}

impl DualGraph {
    pub fn new(ade_type: AdeType, n: u32) -> Result<DualGraph> {
        let ok = match ade_type {
            AdeType::A => n >= 1,
            AdeType::D => n >= 4,
            AdeType::E => (6..=8).contains(&n),
        };
        if !ok {
            return Err(Error::OutOfRange(format!("no Dynkin diagram {ade_type}_{n}")));
        }
        Ok(DualGraph { ade_type, n })
    }

    /// Edges of the Dynkin diagram on vertices `0..n`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n as usize;
        match self.ade_type {
            AdeType::A => (1..n).map(|i| (i - 1, i)).collect(),
            AdeType::D => {
                let mut e: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                e
            }
            AdeType::E => {
                let mut e: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((2, n - 1));
                e
            }
        }
    }

    /// `(E_i . E_j)`: `-2` on the diagonal, `1` for adjacent curves.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n as usize;
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = -2;
        }
        for (a, b) in self.edges() {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        m
    }

    /// `|det (E_i . E_j)|`: `n + 1` for `A_n`, `4` for `D_n`, `9 - n` for `E_n`.
    pub fn tame_determinant(&self) -> u64 {
        match self.ade_type {
            AdeType::A => self.n as u64 + 1,
            AdeType::D => 4,
            AdeType::E => 9 - self.n as u64,
        }
    }

    pub fn is_tame(&self, p: u32) -> bool {
        self.tame_determinant() % p as u64 != 0
    }
}

/// Graphs with index at most `max_n` that are not tame in characteristic `p`.
pub fn not_tame(p: u32, max_n: u32) -> Vec<DualGraph> {
    let mut out = Vec::new();
    for (t, lo) in [(AdeType::A, 1), (AdeType::D, 4), (AdeType::E, 6)] {
        for n in lo..=max_n {
            if let Ok(g) = DualGraph::new(t, n) {
                if !g.is_tame(p) {
                    out.push(g);
                }
            }
        }
    }
    out
}

use std::fmt;

use crate::field::FieldSpec;

use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;

/// Element of a free module `R^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorPoly {
    comps: Vec<Polynomial>,
}

impl VectorPoly {
    pub fn new(comps: Vec<Polynomial>) -> VectorPoly {
        assert!(!comps.is_empty(), "vector must have at least one component");
        let (f, o) = (comps[0].field(), comps[0].order());
        assert!(comps.iter().all(|c| c.field() == f), "components over different fields");
        let comps = comps.into_iter().map(|c| c.with_order(o)).collect();
        VectorPoly { comps }
    }

    pub fn zero(field: FieldSpec, order: MonomialOrder, rank: usize) -> VectorPoly {
        VectorPoly { comps: vec![Polynomial::zero(field, order); rank] }
    }

    /// The `i`-th standard basis vector of `R^rank`.
    pub fn unit(field: FieldSpec, order: MonomialOrder, rank: usize, i: usize) -> VectorPoly {
        let mut v = Self::zero(field, order, rank);
        v.comps[i] = Polynomial::one(field, order);
        v
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.comps[0].field()
    }

    pub fn order(&self) -> MonomialOrder {
        self.comps[0].order()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &VectorPoly) -> VectorPoly {
        assert_eq!(self.rank(), other.rank());
        VectorPoly { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &VectorPoly) -> VectorPoly {
        assert_eq!(self.rank(), other.rank());
        VectorPoly { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Polynomial) -> VectorPoly {
        VectorPoly { comps: self.comps.iter().map(|a| c.with_order(a.order()).mul(a)).collect() }
    }

    /// Inner product with a row of ring elements.
    pub fn dot(&self, row: &[Polynomial]) -> Polynomial {
        assert_eq!(self.rank(), row.len());
        let mut acc = Polynomial::zero(self.field(), self.order());
        for (a, b) in self.comps.iter().zip(row) {
            acc = acc.add(&a.mul(b));
        }
        acc
    }

    pub fn with_order(&self, order: MonomialOrder) -> VectorPoly {
        VectorPoly { comps: self.comps.iter().map(|c| c.with_order(order)).collect() }
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> VectorPoly {
        VectorPoly { comps: self.comps.iter().map(f).collect() }
    }
}

impl fmt::Display for VectorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Gradient `(f_x, f_y, f_z)`.
pub fn jacobian(f: &Polynomial) -> VectorPoly {
    VectorPoly::new((0..3).map(|i| f.derivative(i)).collect())
}

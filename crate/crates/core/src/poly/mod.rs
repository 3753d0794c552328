//! Multivariate polynomials over a [`FieldSpec`](crate::field::FieldSpec),
//! monomial orders, free-module vectors, parsing and printing.

mod monomial;
pub mod parse;
mod polynomial;
mod vector;

pub use monomial::{var_index, Monomial, MonomialOrder, NVARS, VAR_NAMES};
pub use parse::{parse, parse_in};
pub use polynomial::Polynomial;
pub use vector::{jacobian, VectorPoly};

/// `f^k` by repeated squaring.
pub fn power_poly(f: &Polynomial, k: u32) -> Polynomial {
    f.pow(k)
}

#[cfg(test)]
mod tests;

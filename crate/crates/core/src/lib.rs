//! Tangent modules, F-purity and tameness of surface singularities
//! `{f = 0}` in positive characteristic.

pub mod catalog;
pub mod error;
pub mod field;
pub mod forms;
pub mod poly;
pub mod sing;
pub mod stdbasis;

pub use error::{Error, Result};
pub use field::{make_field, FieldElement, FieldSpec};
pub use poly::{jacobian, parse, Monomial, MonomialOrder, Polynomial, VectorPoly};
pub use sing::{analyze, Derivation, GermReport, LzVerdict};
pub use stdbasis::StdOptions;

//! Python bindings: fields, polynomials, germ analysis and the catalog.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use lzsing_core::catalog::{self, AdeType, DualGraph, RdpDescriptor};
use lzsing_core::forms::{parse_form, parse_ratfunc, pole_order, pullback as pull, RationalMap};
use lzsing_core::poly::{var_index, MonomialOrder};
use lzsing_core::{sing, Error, StdOptions};

const LOCAL: MonomialOrder = MonomialOrder::LocalNegDegRevLex;

fn to_py(err: Error) -> PyErr {
    match err {
        Error::ResourceLimit(_) => PyRuntimeError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn budget(pair_budget: Option<usize>) -> StdOptions {
    StdOptions { pair_budget: pair_budget.unwrap_or(StdOptions::default().pair_budget) }
}

/// A finite field `F_p` or `F_p[a]/(mu)`.
#[pyclass(frozen, skip_from_py_object, name = "Field")]
#[derive(Clone)]
struct Field {
    inner: lzsing_core::FieldSpec,
}

#[pymethods]
impl Field {
    #[new]
    #[pyo3(signature = (p, ext=None))]
    fn new(p: u64, ext: Option<&str>) -> PyResult<Self> {
        Ok(Field { inner: lzsing_core::make_field(p, ext).map_err(to_py)? })
    }

    #[getter]
    fn characteristic(&self) -> u32 {
        self.inner.characteristic()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn size(&self) -> u128 {
        self.inner.size()
    }

    #[getter]
    fn min_poly(&self) -> Option<String> {
        self.inner.min_poly_string()
    }

    fn __repr__(&self) -> String {
        match self.inner.min_poly_string() {
            Some(mu) => format!("Field({}, {mu:?})", self.inner.characteristic()),
            None => format!("Field({})", self.inner.characteristic()),
        }
    }
}

/// Polynomial in x, y, z, u, v, w over a [`Field`].
#[pyclass(frozen, skip_from_py_object, name = "Polynomial")]
#[derive(Clone)]
struct Polynomial {
    inner: lzsing_core::Polynomial,
}

#[pymethods]
impl Polynomial {
    #[new]
    fn new(src: &str, field: &Field) -> PyResult<Self> {
        Ok(Polynomial { inner: lzsing_core::parse(src, field.inner, LOCAL).map_err(to_py)? })
    }

    #[getter]
    fn field(&self) -> Field {
        Field { inner: self.inner.field() }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Partial derivative with respect to a variable name.
    fn derivative(&self, var: &str) -> PyResult<Polynomial> {
        let i = var_index(var).ok_or_else(|| PyValueError::new_err(format!("unknown variable {var:?}")))?;
        Ok(Polynomial { inner: self.inner.derivative(i) })
    }

    /// `[f_x, f_y, f_z]`.
    fn jacobian(&self) -> Vec<Polynomial> {
        lzsing_core::jacobian(&self.inner).into_components().into_iter().map(|inner| Polynomial { inner }).collect()
    }

    fn __add__(&self, o: &Polynomial) -> Polynomial {
        Polynomial { inner: self.inner.add(&o.inner) }
    }

    fn __sub__(&self, o: &Polynomial) -> Polynomial {
        Polynomial { inner: self.inner.sub(&o.inner) }
    }

    fn __mul__(&self, o: &Polynomial) -> Polynomial {
        Polynomial { inner: self.inner.mul(&o.inner) }
    }

    fn __pow__(&self, k: u32, _modulo: Option<u32>) -> Polynomial {
        Polynomial { inner: self.inner.pow(k) }
    }

    fn __eq__(&self, o: &Polynomial) -> bool {
        self.inner == o.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?})", self.inner.to_string())
    }
}

/// Derivation `a*d/dx + b*d/dy + c*d/dz`.
#[pyclass(frozen, skip_from_py_object, name = "Derivation")]
#[derive(Clone)]
struct Derivation {
    inner: lzsing_core::Derivation,
}

#[pymethods]
impl Derivation {
    #[new]
    fn new(a: &str, b: &str, c: &str, field: &Field) -> PyResult<Self> {
        Ok(Derivation { inner: lzsing_core::Derivation::parse(a, b, c, field.inner).map_err(to_py)? })
    }

    fn coefficients(&self) -> Vec<String> {
        self.inner.coefficient_strings().to_vec()
    }

    fn apply(&self, g: &Polynomial) -> Polynomial {
        Polynomial { inner: self.inner.apply(&g.inner) }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Derivation({:?})", self.inner.to_string())
    }
}

#[pyfunction]
fn is_f_pure(f: &Polynomial) -> PyResult<bool> {
    sing::is_f_pure(&f.inner).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (f, pair_budget=None))]
fn tangent_module(f: &Polynomial, pair_budget: Option<usize>) -> PyResult<Vec<Derivation>> {
    let gens = sing::tangent_module(&f.inner, budget(pair_budget)).map_err(to_py)?;
    Ok(gens.into_iter().map(|inner| Derivation { inner }).collect())
}

#[pyfunction]
#[pyo3(signature = (f, pair_budget=None))]
fn is_tangent_free(f: &Polynomial, pair_budget: Option<usize>) -> PyResult<bool> {
    sing::is_tangent_free(&f.inner, budget(pair_budget)).map_err(to_py)
}

/// `"Smooth"`, `"SatisfiesLZ"` or `"ViolatesLZ"`.
#[pyfunction]
#[pyo3(signature = (f, pair_budget=None))]
fn lz_verdict(f: &Polynomial, pair_budget: Option<usize>) -> PyResult<String> {
    Ok(format!("{:?}", sing::lz_verdict(&f.inner, budget(pair_budget)).map_err(to_py)?))
}

/// Full report for `f` over `F_p` (or `F_p[a]/(ext)`) as a dict.
#[pyfunction]
#[pyo3(signature = (f, p, ext=None, pair_budget=None))]
fn check<'py>(py: Python<'py>, f: &str, p: u64, ext: Option<&str>, pair_budget: Option<usize>) -> PyResult<Bound<'py, PyDict>> {
    let field = lzsing_core::make_field(p, ext).map_err(to_py)?;
    let f = lzsing_core::parse(f, field, LOCAL).map_err(to_py)?;
    let r = lzsing_core::analyze(&f, budget(pair_budget)).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("characteristic", r.p)?;
    d.set_item("extension", field.min_poly_string())?;
    d.set_item("f", r.f.to_string())?;
    d.set_item("f_pure", r.f_pure)?;
    d.set_item("isolated", r.isolated)?;
    d.set_item("singular", r.singular_at_origin)?;
    d.set_item("tangent_free", r.tangent_free)?;
    d.set_item("min_generators", r.min_gen_count)?;
    let gens: Vec<String> = r.tangent_generators.iter().map(|g| g.to_string()).collect();
    d.set_item("generators", gens)?;
    Ok(d)
}

/// `(|det|, tame)` for the dual graph of an ADE singularity.
#[pyfunction]
fn tame(ade_type: &str, n: u32, p: u32) -> PyResult<(u64, bool)> {
    let t: AdeType = ade_type.parse().map_err(to_py)?;
    let g = DualGraph::new(t, n).map_err(to_py)?;
    Ok((g.tame_determinant(), g.is_tame(p)))
}

fn descriptor_dict<'py>(py: Python<'py>, d: &RdpDescriptor) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("name", d.name())?;
    out.set_item("type", d.ade_type.to_string())?;
    out.set_item("n", d.n)?;
    out.set_item("r", d.r)?;
    out.set_item("p", d.p)?;
    out.set_item("equation", d.equation_string())?;
    out.set_item("f_pure", d.literature.f_pure)?;
    out.set_item("almost_equivariant", d.literature.almost_equivariant)?;
    out.set_item("lz_holds", d.literature.lz_holds)?;
    Ok(out)
}

/// Normal forms in characteristic `p` with published verdicts.
#[pyfunction]
#[pyo3(signature = (p, max_n=8))]
fn catalog_entries<'py>(py: Python<'py>, p: u32, max_n: u32) -> PyResult<Vec<Bound<'py, PyDict>>> {
    catalog::entries(p, max_n).map_err(to_py)?.iter().map(|d| descriptor_dict(py, d)).collect()
}

#[pyfunction]
fn corollary_exceptions(py: Python<'_>) -> PyResult<Vec<Bound<'_, PyDict>>> {
    catalog::corollary_exceptions().iter().map(|d| descriptor_dict(py, d)).collect()
}

/// Pull back a 1-form along `var := image` over `F_p`; returns the form
/// and its pole order along `pole_var`.
#[pyfunction]
fn pullback(form: &str, var: &str, image: &str, pole_var: &str, p: u64) -> PyResult<(String, u32)> {
    let k = lzsing_core::make_field(p, None).map_err(to_py)?;
    let unknown = |v: &str| PyValueError::new_err(format!("unknown variable {v:?}"));
    let v = var_index(var).ok_or_else(|| unknown(var))?;
    let w = var_index(pole_var).ok_or_else(|| unknown(pole_var))?;
    let alpha = parse_form(form, k).map_err(to_py)?;
    let phi = RationalMap::new(vec![(v, parse_ratfunc(image, k).map_err(to_py)?)]);
    let pulled = pull(&alpha, &phi).map_err(to_py)?;
    Ok((pulled.to_string(), pole_order(&pulled, w)))
}

#[pymodule]
fn lzsing(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Field>()?;
    m.add_class::<Polynomial>()?;
    m.add_class::<Derivation>()?;
    m.add_function(wrap_pyfunction!(is_f_pure, m)?)?;
    m.add_function(wrap_pyfunction!(tangent_module, m)?)?;
    m.add_function(wrap_pyfunction!(is_tangent_free, m)?)?;
    m.add_function(wrap_pyfunction!(lz_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(tame, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_entries, m)?)?;
    m.add_function(wrap_pyfunction!(corollary_exceptions, m)?)?;
    m.add_function(wrap_pyfunction!(pullback, m)?)?;
    Ok(())
}

//! Python bindings. Reports are returned as plain Python objects decoded
//! from the same JSON documents the command-line tool writes.

use altdef_core::cochain::{apply_differential, differential_matrix};
use altdef_core::deformation::{self, square as square_op};
use altdef_core::identities::check_identity_named;
use altdef_core::linalg::{format_rational, parse_rational, rank};
use altdef_core::{io, Element, Identity, Theory};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::Value;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    Ok(py
        .import("json")?
        .call_method1("loads", (v.to_string(),))?
        .unbind())
}

fn theory(name: &str) -> PyResult<Theory> {
    name.parse().map_err(value_err)
}

fn element(coords: Vec<String>) -> PyResult<Element> {
    coords
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()
        .map(Element::new)
        .map_err(value_err)
}

/// A finite-dimensional algebra over the rationals.
#[pyclass(name = "Algebra", module = "altdef", frozen, from_py_object)]
#[derive(Clone)]
struct PyAlgebra(altdef_core::Algebra);

#[pymethods]
impl PyAlgebra {
    /// Built-in algebra by name (`m2`, `octonions`, `alt4-a`, `alt4-b`, `k-trivial`, `zero-<n>`).
    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        altdef_core::catalog(name).map(Self).map_err(value_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::parse_algebra(text).map(Self).map_err(value_err)
    }

    fn to_json(&self) -> String {
        io::to_canonical_string(&io::algebra_to_value(&self.0))
    }

    #[getter]
    fn name(&self) -> &str {
        self.0.name()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.0.basis_names().to_vec()
    }

    /// Product of two coordinate vectors given as rational strings.
    fn multiply(&self, x: Vec<String>, y: Vec<String>) -> PyResult<Vec<String>> {
        let z = self
            .0
            .multiply(&element(x)?, &element(y)?)
            .map_err(value_err)?;
        Ok(z.coords().iter().map(format_rational).collect())
    }

    fn __repr__(&self) -> String {
        format!("Algebra({:?}, dim={})", self.0.name(), self.0.dim())
    }
}

/// A p-cochain stored as its full coordinate table.
#[pyclass(name = "Cochain", module = "altdef", frozen, from_py_object)]
#[derive(Clone)]
struct PyCochain(altdef_core::Cochain);

#[pymethods]
impl PyCochain {
    /// `entries` maps 1-based index tuples `(i1, …, ip, k)` to rational strings.
    #[new]
    fn new(degree: usize, dim: usize, entries: Vec<(Vec<usize>, String)>) -> PyResult<Self> {
        let mut zero_based = Vec::with_capacity(entries.len());
        for (idx, value) in entries {
            if idx.contains(&0) {
                return Err(PyValueError::new_err("cochain indices are 1-based"));
            }
            let idx = idx.into_iter().map(|i| i - 1).collect();
            zero_based.push((idx, parse_rational(&value).map_err(value_err)?));
        }
        altdef_core::Cochain::from_entries(degree, dim, &zero_based)
            .map(Self)
            .map_err(value_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::parse_cochain(text).map(Self).map_err(value_err)
    }

    fn to_json(&self) -> String {
        io::to_canonical_string(&io::cochain_to_value(&self.0))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Nonzero entries with 1-based indices.
    fn entries(&self) -> Vec<(Vec<usize>, String)> {
        self.0
            .nonzero_entries()
            .into_iter()
            .map(|(idx, v)| (idx.into_iter().map(|i| i + 1).collect(), format_rational(v)))
            .collect()
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.add(&other.0).map(Self).map_err(value_err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.sub(&other.0).map(Self).map_err(value_err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!(
            "Cochain(degree={}, dim={}, nonzero={})",
            self.0.degree(),
            self.0.dim(),
            self.0.nonzero_entries().len()
        )
    }
}

fn jet(algebra: &PyAlgebra, terms: Vec<PyCochain>) -> PyResult<altdef_core::DeformationJet> {
    altdef_core::DeformationJet::new(algebra.0.clone(), terms.into_iter().map(|c| c.0).collect())
        .map_err(value_err)
}

/// Identity reports; all nine identities when `names` is omitted.
#[pyfunction]
#[pyo3(signature = (algebra, names=None))]
fn check_identities(
    py: Python<'_>,
    algebra: &PyAlgebra,
    names: Option<Vec<String>>,
) -> PyResult<Py<PyAny>> {
    let names =
        names.unwrap_or_else(|| Identity::ALL.iter().map(|i| i.name().to_string()).collect());
    let mut out = Vec::new();
    for n in &names {
        let r = check_identity_named(&algebra.0, n).map_err(value_err)?;
        out.push(io::identity_report_value(&r));
    }
    to_py(py, &Value::Array(out))
}

#[pyfunction]
#[pyo3(signature = (algebra, degree, theory="left-alternative"))]
fn cohomology(
    py: Python<'_>,
    algebra: &PyAlgebra,
    degree: usize,
    theory: &str,
) -> PyResult<Py<PyAny>> {
    let r =
        altdef_core::cohomology(&algebra.0, degree, self::theory(theory)?).map_err(value_err)?;
    to_py(py, &io::cohomology_report_value(algebra.0.name(), &r))
}

#[pyfunction]
#[pyo3(signature = (algebra, cochain, theory="left-alternative"))]
fn verify_class(
    py: Python<'_>,
    algebra: &PyAlgebra,
    cochain: &PyCochain,
    theory: &str,
) -> PyResult<Py<PyAny>> {
    let t = self::theory(theory)?;
    let c = altdef_core::verify_class(&algebra.0, &cochain.0, t).map_err(value_err)?;
    to_py(py, &io::class_check_value(algebra.0.name(), t.name(), &c))
}

#[pyfunction]
#[pyo3(signature = (algebra, cochain, theory="left-alternative"))]
fn differential(algebra: &PyAlgebra, cochain: &PyCochain, theory: &str) -> PyResult<PyCochain> {
    apply_differential(&algebra.0, &cochain.0, self::theory(theory)?)
        .map(PyCochain)
        .map_err(value_err)
}

/// Rank of the differential matrix on p-cochains.
#[pyfunction]
#[pyo3(signature = (algebra, degree, theory="left-alternative"))]
fn differential_rank(algebra: &PyAlgebra, degree: usize, theory: &str) -> PyResult<usize> {
    let d = differential_matrix(&algebra.0, degree, self::theory(theory)?).map_err(value_err)?;
    Ok(rank(&d.matrix))
}

#[pyfunction]
fn square(mi: &PyCochain, mj: &PyCochain) -> PyResult<PyCochain> {
    square_op(&mi.0, &mj.0).map(PyCochain).map_err(value_err)
}

/// Obstruction to extending the jet `(μ₁, …, μ_{m-1})` by one order.
#[pyfunction]
fn obstruction(py: Python<'_>, algebra: &PyAlgebra, terms: Vec<PyCochain>) -> PyResult<Py<PyAny>> {
    let r = deformation::obstruction(&jet(algebra, terms)?).map_err(value_err)?;
    to_py(py, &io::obstruction_value(&r))
}

#[pyfunction]
fn integrate(
    py: Python<'_>,
    algebra: &PyAlgebra,
    mu1: &PyCochain,
    max_order: usize,
) -> PyResult<Py<PyAny>> {
    let r = deformation::integrate(&algebra.0, &mu1.0, max_order).map_err(value_err)?;
    to_py(py, &io::integration_value(&r, max_order))
}

#[pyfunction]
fn deformation_residuals(
    py: Python<'_>,
    algebra: &PyAlgebra,
    terms: Vec<PyCochain>,
) -> PyResult<Py<PyAny>> {
    let r = deformation::deformation_residuals(&jet(algebra, terms)?).map_err(value_err)?;
    to_py(py, &io::residuals_value("deformation-residuals", &r))
}

#[pyfunction]
fn kill_leading_coboundary(
    py: Python<'_>,
    algebra: &PyAlgebra,
    terms: Vec<PyCochain>,
) -> PyResult<Py<PyAny>> {
    let (normal, gauge) =
        deformation::kill_leading_coboundary(&jet(algebra, terms)?).map_err(value_err)?;
    to_py(py, &io::normalization_value(&normal, &gauge))
}

#[pymodule]
fn altdef(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyCochain>()?;
    m.add_function(wrap_pyfunction!(check_identities, m)?)?;
    m.add_function(wrap_pyfunction!(cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(verify_class, m)?)?;
    m.add_function(wrap_pyfunction!(differential, m)?)?;
    m.add_function(wrap_pyfunction!(differential_rank, m)?)?;
    m.add_function(wrap_pyfunction!(square, m)?)?;
    m.add_function(wrap_pyfunction!(obstruction, m)?)?;
    m.add_function(wrap_pyfunction!(integrate, m)?)?;
    m.add_function(wrap_pyfunction!(deformation_residuals, m)?)?;
    m.add_function(wrap_pyfunction!(kill_leading_coboundary, m)?)?;
    Ok(())
}

//! Python bindings: intersection-array analysis, classification, graph
//! construction and graph-level verification.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyList;

use qdrg_core::cli::{ClassifyReport, Report, VerifyReport};
use qdrg_core::constructions::Construction;
use qdrg_core::exact_math::{parse_rational, Rational};
use qdrg_core::graphs::{self, theorem_conditions_graph};
use qdrg_core::params::{self, spectrum};
use qdrg_core::theorem::{self, classify as classify_diameter};
use qdrg_core::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::InternalInconsistency(_) | Error::IdempotencyFailed(_) | Error::Overflow => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn rational_arg(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text = obj.str()?.to_string();
    parse_rational(text.trim()).ok_or_else(|| PyValueError::new_err(format!("not a rational: {text:?}")))
}

fn json_to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.getattr("loads")?.call1((text,))
}

#[pyclass(name = "IntersectionArray", frozen)]
struct PyIntersectionArray {
    inner: params::IntersectionArray,
}

#[pymethods]
impl PyIntersectionArray {
    #[new]
    fn new(b: Vec<i64>, c: Vec<i64>) -> PyResult<Self> {
        params::IntersectionArray::validate(&b, &c).map(|inner| Self { inner }).map_err(py_err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(|inner| Self { inner }).map_err(py_err)
    }

    #[getter]
    fn b(&self) -> Vec<i64> {
        self.inner.b_list().to_vec()
    }

    #[getter]
    fn c(&self) -> Vec<i64> {
        self.inner.c_list().to_vec()
    }

    #[getter]
    fn a(&self) -> Vec<i64> {
        self.inner.a_list()
    }

    #[getter]
    fn diameter(&self) -> usize {
        self.inner.diameter()
    }

    #[getter]
    fn valency(&self) -> i64 {
        self.inner.valency()
    }

    #[getter]
    fn vertex_count(&self) -> String {
        self.inner.vertex_count().to_string()
    }

    /// Exact eigenvalues in descending order; irrational ones are skipped
    /// by this accessor.
    fn eigenvalues<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let sd = spectrum(&self.inner).map_err(py_err)?;
        sd.entries.iter().filter_map(|e| e.eigenvalue.exact()).map(|t| fraction(py, t)).collect()
    }

    fn multiplicity<'py>(&self, py: Python<'py>, theta: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        let m = params::multiplicity(&self.inner, &rational_arg(theta)?).map_err(py_err)?;
        fraction(py, &m)
    }

    fn cosine_sequence<'py>(&self, py: Python<'py>, theta: &Bound<'py, PyAny>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let cs = params::cosine_sequence(&self.inner, &rational_arg(theta)?).map_err(py_err)?;
        cs.sigma.iter().map(|s| fraction(py, s)).collect()
    }

    /// Orderings as lists of spectrum indices.
    fn q_polynomial_orderings(&self) -> PyResult<Vec<Vec<usize>>> {
        params::q_polynomial_orderings(&self.inner).map_err(py_err)
    }

    fn classical_parameters(&self) -> Vec<String> {
        params::classical_fit(&self.inner).iter().map(|cp| cp.to_string()).collect()
    }

    fn near_polygon_order(&self) -> Option<(i64, i64)> {
        params::near_polygon_order(&self.inner)
    }

    /// Parameter-level verdicts keyed by condition tag; `None` marks the
    /// graph-level conditions.
    fn theorem<'py>(&self, py: Python<'py>, theta: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        let verdicts = theorem::parameter_conditions(&self.inner, &rational_arg(theta)?);
        let rows: Vec<(String, Option<bool>)> = verdicts
            .iter()
            .map(|v| (v.condition.to_string(), (!v.graph_level_required).then_some(v.holds)))
            .collect();
        Ok(PyList::new(py, rows)?.into_any())
    }

    /// Full report as nested dicts with rationals as `p/q` strings.
    fn report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &Report::analyze(&self.inner).map_err(py_err)?)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("IntersectionArray({:?}, {:?})", self.inner.b_list(), self.inner.c_list())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: graphs::Graph,
}

#[pymethods]
impl PyGraph {
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        graphs::Graph::parse(text).map(|inner| Self { inner }).map_err(py_err)
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        graphs::Graph::from_edges(n, &edges).map(|inner| Self { inner }).map_err(py_err)
    }

    /// One of `grid3x3`, `gq22`, `dual-polar-a3`, `dual-polar-a5`,
    /// `golay3-coset`, `octad`, `petersen`, `triangular5`.
    #[staticmethod]
    fn construct(py: Python<'_>, name: &str) -> PyResult<Self> {
        let which: Construction = name.parse().map_err(PyValueError::new_err)?;
        let inner = py.detach(|| which.build()).map_err(py_err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn intersection_numbers(&self, py: Python<'_>) -> PyResult<PyIntersectionArray> {
        py.detach(|| graphs::intersection_numbers(&self.inner))
            .map(|inner| PyIntersectionArray { inner })
            .map_err(py_err)
    }

    /// Six-condition report at `theta` (a rational, or `"min"`).
    fn verify<'py>(&self, py: Python<'py>, theta: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        let arr = py.detach(|| graphs::intersection_numbers(&self.inner)).map_err(py_err)?;
        let theta = if theta.str()? == "min" {
            let sd = spectrum(&arr).map_err(py_err)?;
            sd.min_eigenvalue()
                .exact()
                .cloned()
                .ok_or_else(|| PyValueError::new_err("minimal eigenvalue is irrational"))?
        } else {
            rational_arg(theta)?
        };
        let report = py.detach(|| theorem_conditions_graph(&self.inner, &theta)).map_err(py_err)?;
        json_to_py(py, &VerifyReport::new("<memory>", &self.inner, &report))
    }
}

#[pyfunction]
fn analyze<'py>(py: Python<'py>, b: Vec<i64>, c: Vec<i64>) -> PyResult<Bound<'py, PyAny>> {
    let arr = params::IntersectionArray::validate(&b, &c).map_err(py_err)?;
    json_to_py(py, &Report::analyze(&arr).map_err(py_err)?)
}

#[pyfunction]
fn classify<'py>(py: Python<'py>, diameter: usize) -> PyResult<Bound<'py, PyAny>> {
    let entries = classify_diameter(diameter).map_err(py_err)?;
    json_to_py(py, &ClassifyReport::new(diameter, &entries))
}

/// Eigenvalues (with multiplicity) of the 3-clique Gram matrix.
#[pyfunction]
fn gram_3clique<'py>(py: Python<'py>, sigma1: &Bound<'py, PyAny>) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let g = graphs::gram_3clique(&rational_arg(sigma1)?).map_err(py_err)?;
    g.eigenvalues.iter().map(|e| fraction(py, e)).collect()
}

#[pymodule]
fn pyqdrg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIntersectionArray>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(gram_3clique, m)?)?;
    Ok(())
}

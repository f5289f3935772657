//! Python bindings. Reports come back as plain dicts (parsed from the same
//! JSON the CLI writes); exact rationals are `"num/den"` strings.

use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use einsu::curvature::{ricci_components_symmetric, SymmetricMetric};
use einsu::einstein::{self, SolveOptions};
use einsu::exactpoly::{format_rational, parse_rational, to_decimal};
use einsu::liealg::Partition;
use einsu::report::{SolutionRecord, SolveDocument};
use einsu::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parameter(_) | Error::DegeneratePartition(_) | Error::UnsupportedShape(_) | Error::Domain(_) => {
            PyValueError::new_err(e.to_string())
        }
        Error::TheoremViolation(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyArithmeticError::new_err(e.to_string()),
    }
}

fn to_py<T: Serialize>(py: Python<'_>, v: &T) -> PyResult<Py<PyAny>> {
    let s = serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (s,))?.unbind())
}

/// Parameters `(k1, k, p)` of the symmetric family.
#[pyclass(frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct SystemParams(einstein::SystemParams);

#[pymethods]
impl SystemParams {
    #[new]
    fn new(k1: u32, k: u32, p: u32) -> PyResult<Self> {
        einstein::SystemParams::new(k1, k, p).map(SystemParams).map_err(py_err)
    }
    #[getter]
    fn k1(&self) -> u32 {
        self.0.k1
    }
    #[getter]
    fn k(&self) -> u32 {
        self.0.k
    }
    #[getter]
    fn p(&self) -> u32 {
        self.0.p
    }
    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }
    fn __repr__(&self) -> String {
        format!("SystemParams(k1={}, k={}, p={})", self.0.k1, self.0.k, self.0.p)
    }
}

/// Result of `solve`.
#[pyclass(frozen)]
struct SolveResult {
    report: einstein::SolveReport,
}

#[pymethods]
impl SolveResult {
    #[getter]
    fn params(&self) -> SystemParams {
        SystemParams(self.report.params)
    }
    #[getter]
    fn theorem_met(&self) -> bool {
        self.report.theorem.met
    }
    #[getter]
    fn residuals_ok(&self) -> bool {
        self.report.residuals_ok()
    }
    /// Decimal `x12` of the Case 2 solutions, ascending.
    fn case2_x12(&self) -> Vec<f64> {
        self.report.case2().map(|s| s.x12_f64()).collect()
    }
    /// One dict per solution, with the same fields as the CSV rows.
    fn records(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let recs: Vec<SolutionRecord> =
            self.report.solutions.iter().map(|s| SolutionRecord::from_solution(s, &[])).collect();
        to_py(py, &recs)
    }
    fn to_dict(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &SolveDocument::new(&self.report, None, None))
    }
    fn __len__(&self) -> usize {
        self.report.solutions.len()
    }
    fn __repr__(&self) -> String {
        format!(
            "SolveResult({}, solutions={}, case2={}, theorem_met={})",
            self.report.params,
            self.report.solutions.len(),
            self.report.case2().count(),
            self.report.theorem.met
        )
    }
}

/// Finds every Einstein metric of the family for `(k1, k, p)`.
#[pyfunction]
#[pyo3(signature = (k1, k, p, precision_bits=256, oracle=true, strict=false))]
fn solve(
    py: Python<'_>,
    k1: u32,
    k: u32,
    p: u32,
    precision_bits: u32,
    oracle: bool,
    strict: bool,
) -> PyResult<SolveResult> {
    let params = einstein::SystemParams::new(k1, k, p).map_err(py_err)?;
    let opts = SolveOptions { precision_bits, oracle, strict, ..SolveOptions::default() };
    let report = py.detach(|| einstein::solve_with(&params, &opts)).map_err(py_err)?;
    Ok(SolveResult { report })
}

/// Coefficients of the degree-16 polynomial in `x12`, constant term first.
#[pyfunction]
fn f3_coeffs(k1: u32, k: u32, p: u32) -> PyResult<Vec<String>> {
    let params = einstein::SystemParams::new(k1, k, p).map_err(py_err)?;
    let f = einstein::f3_coeffs(&params).map_err(py_err)?;
    Ok(f.coeffs().iter().map(format_rational).collect())
}

/// Coefficients of the `k1 = k` factor, constant term first.
#[pyfunction]
fn g3_coeffs(k: u32, p: u32) -> PyResult<Vec<String>> {
    let params = einstein::SystemParams::new(k, k, p).map_err(py_err)?;
    let g = einstein::g3_coeffs(&params).map_err(py_err)?;
    Ok(g.coeffs().iter().map(format_rational).collect())
}

/// Ricci components `(rr1, rr2, r1, r2, r12, r23)` of the diagonal metric
/// `(y1, y2, x1, x2, x12, x23)`.
#[pyfunction]
#[pyo3(signature = (k1, k, p, y1, y2, x1, x2, x12, x23=1.0))]
#[allow(clippy::too_many_arguments)]
fn ricci_components(
    k1: u32,
    k: u32,
    p: u32,
    y1: f64,
    y2: f64,
    x1: f64,
    x2: f64,
    x12: f64,
    x23: f64,
) -> PyResult<Vec<f64>> {
    let m = SymmetricMetric { y1, y2, x1, x2, x12, x23 };
    let r = ricci_components_symmetric(k1, k, p, &m).map_err(py_err)?;
    Ok(r.as_array().iter().map(|v| **v).collect())
}

/// Einstein constant along the Case 2 curve at an exact `x12` such as
/// `"3/4"`; returns `(exact, decimal)`.
#[pyfunction]
fn einstein_constant(k1: u32, k: u32, p: u32, x12: &str) -> PyResult<(String, String)> {
    let params = einstein::SystemParams::new(k1, k, p).map_err(py_err)?;
    let x = parse_rational(x12).map_err(py_err)?;
    let l = einstein::einstein_constant(&params, &x).map_err(py_err)?;
    Ok((format_rational(&l), to_decimal(&l, 30)))
}

/// Runs the oracle suite on a partition such as `[2, 2, 2]`.
#[pyfunction]
#[pyo3(signature = (parts, trials=20, seed=42))]
fn verify(py: Python<'_>, parts: Vec<usize>, trials: usize, seed: u64) -> PyResult<Py<PyAny>> {
    let partition = Partition::new(parts).map_err(py_err)?;
    if partition.n() > einsu::verify::VERIFY_MAX_N {
        return Err(PyValueError::new_err(format!("N = {} exceeds the verify cap", partition.n())));
    }
    let rep = py.detach(|| einsu::verify::verify_partition(&partition, trials, seed)).map_err(py_err)?;
    to_py(py, &rep)
}

/// Monotonicity and sign-pattern certificates.
#[pyfunction]
#[pyo3(signature = (k1, k, p, grid_size=100))]
fn certify(py: Python<'_>, k1: u32, k: u32, p: u32, grid_size: usize) -> PyResult<Py<PyAny>> {
    let params = einstein::SystemParams::new(k1, k, p).map_err(py_err)?;
    let (mono, remark1) = py
        .detach(|| -> einsu::Result<_> {
            Ok((
                einstein::lambda_monotonicity_certificate(&params, grid_size)?,
                einstein::remark1_certificate(&params)?,
            ))
        })
        .map_err(py_err)?;
    #[derive(Serialize)]
    struct Certs {
        monotonicity: einstein::MonotonicityCertificate,
        remark1: einstein::SignCertificate,
    }
    to_py(py, &Certs { monotonicity: mono, remark1 })
}

#[pymodule]
pub fn einsu_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<SystemParams>()?;
    m.add_class::<SolveResult>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(f3_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(g3_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(ricci_components, m)?)?;
    m.add_function(wrap_pyfunction!(einstein_constant, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add("SCHEMA", einsu::report::SCHEMA)?;
    Ok(())
}

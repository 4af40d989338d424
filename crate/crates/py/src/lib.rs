//! Python bindings. Inputs and certificates cross the boundary as JSON text.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use ghc_core::certify::{self as pipeline, Certificate, ProblemInput};
use ghc_core::kostant::{kostant_cohomology, verify_vanishing};
use ghc_core::rational::fmt_vec;
use ghc_core::{Error, ErrorKind};

create_exception!(ghc, CapExceeded, PyException);
create_exception!(ghc, InternalError, PyException);

fn py_err(e: Error) -> PyErr {
    match e.kind() {
        ErrorKind::Input => PyValueError::new_err(e.to_string()),
        ErrorKind::Cap => CapExceeded::new_err(e.to_string()),
        ErrorKind::Search | ErrorKind::Internal => InternalError::new_err(e.to_string()),
    }
}

fn parse(input: &str) -> PyResult<ProblemInput> {
    ProblemInput::from_json(input).map_err(py_err)
}

/// Runs the decision procedure and returns the certificate as JSON.
#[pyfunction]
#[pyo3(signature = (input, oracle_check = false, seed = None))]
fn certify(py: Python<'_>, input: &str, oracle_check: bool, seed: Option<u64>) -> PyResult<String> {
    let mut input = parse(input)?;
    if seed.is_some() {
        input.search.seed = seed;
    }
    py.detach(|| pipeline::certify(&input, oracle_check)).map(|c| c.to_json()).map_err(py_err)
}

/// Returns `(accepted, failures)`.
#[pyfunction]
fn verify(py: Python<'_>, certificate: &str, input: &str) -> PyResult<(bool, Vec<String>)> {
    let cert = Certificate::from_json(certificate).map_err(py_err)?;
    let input = parse(input)?;
    let v = py.detach(|| pipeline::verify_certificate(&cert, &input)).map_err(py_err)?;
    Ok((v.accepted, v.failures))
}

#[pyfunction]
fn check_ideal(input: &str) -> PyResult<bool> {
    Ok(pipeline::check_ideal(&parse(input)?).map_err(py_err)?.is_ideal)
}

#[pyfunction]
fn input_hash(input: &str) -> PyResult<String> {
    parse(input)?.input_hash().map_err(py_err)
}

/// Kostant summands of `H^degree(n, W)` with `ν` given by its labels on
/// the simple coroots of `b`. Returns `(summands, total_dim, vanishing)`,
/// each summand a `(word, gamma)` pair with `gamma` as `"p/q"` strings.
#[pyfunction]
#[pyo3(signature = (input, nu, degree = None))]
fn kostant(input: &str, nu: Vec<i64>, degree: Option<usize>) -> PyResult<(Vec<(Vec<usize>, Vec<String>)>, String, bool)> {
    let tr = pipeline::transcript(&parse(input)?).map_err(py_err)?;
    let nu = tr.nu_from_labels(&nu).map_err(py_err)?;
    let g = &tr.reduction.algebra;
    let r = degree.unwrap_or(tr.parabolic.r);
    let d = kostant_cohomology(g, &tr.parabolic, &nu, r).map_err(py_err)?;
    let vanishing = verify_vanishing(g, &tr.parabolic, &nu, r).map_err(py_err)?;
    let summands = d.summands.iter().map(|s| (s.w.word.clone(), fmt_vec(&s.gamma.coords))).collect();
    Ok((summands, d.total_dim.to_string(), vanishing))
}

#[pymodule]
fn ghc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("CapExceeded", m.py().get_type::<CapExceeded>())?;
    m.add("InternalError", m.py().get_type::<InternalError>())?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(check_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(input_hash, m)?)?;
    m.add_function(wrap_pyfunction!(kostant, m)?)?;
    Ok(())
}

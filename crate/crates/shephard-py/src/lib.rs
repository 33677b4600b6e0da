use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use shephard::complex::{build_theta_hat_ball, cat0_report, RadiusPolicy};
use shephard::dihedral::{certify_girth, DihedralSession, ElementOrder, SyllableWord};
use shephard::graph::{parse_graph, DEFAULT_MOUSSONG_LIMIT};
use shephard::report::{
    build_dihedral_report, build_verdict_report, to_sorted_json, ReportOptions,
};
use shephard::triangle::DEFAULT_BUDGET;
use shephard::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::InvalidInput(_) | Error::InvalidGraph(_) | Error::Parse { .. } => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn word(text: &str) -> PyResult<SyllableWord> {
    SyllableWord::parse(text).map_err(py_err)
}

/// Word problem session for one Sh(p, q, r).
#[pyclass(name = "Session")]
struct Session {
    inner: DihedralSession,
}

#[pymethods]
impl Session {
    #[new]
    #[pyo3(signature = (p, q, r, budget = DEFAULT_BUDGET))]
    fn new(p: u32, q: u32, r: u32, budget: usize) -> PyResult<Self> {
        let inner = DihedralSession::new(p, q, r, budget).map_err(py_err)?;
        Ok(Session { inner })
    }

    fn is_trivial(&mut self, w: &str) -> PyResult<bool> {
        self.inner.is_trivial(&word(w)?).map_err(py_err)
    }

    fn are_equal(&mut self, u: &str, v: &str) -> PyResult<bool> {
        self.inner.are_equal(&word(u)?, &word(v)?).map_err(py_err)
    }

    /// None for elements of infinite order.
    #[pyo3(signature = (w, cutoff = 10_000))]
    fn element_order(&mut self, w: &str, cutoff: u64) -> PyResult<Option<u64>> {
        match self
            .inner
            .element_order(&word(w)?, cutoff)
            .map_err(py_err)?
        {
            ElementOrder::Finite(n) => Ok(Some(n)),
            ElementOrder::Infinite => Ok(None),
        }
    }

    /// Normal form as a JSON string.
    fn normal_form(&mut self, w: &str) -> PyResult<String> {
        let nf = self.inner.normalize(&word(w)?).map_err(py_err)?;
        Ok(to_sorted_json(&self.inner.normal_form_json(&nf)))
    }
}

/// Dihedral report for Sh(p, q, r) as a JSON string.
#[pyfunction]
fn classify(p: u32, q: u32, r: u32) -> PyResult<String> {
    Ok(to_sorted_json(
        &build_dihedral_report(p, q, r).map_err(py_err)?,
    ))
}

#[pyfunction]
#[pyo3(signature = (p, q, r, max_syllables = None, budget = 50_000_000))]
fn girth(p: u32, q: u32, r: u32, max_syllables: Option<usize>, budget: u64) -> PyResult<String> {
    let top = max_syllables.unwrap_or(2 * q as usize - 1);
    Ok(to_sorted_json(
        &certify_girth(p, q, r, top, budget).map_err(py_err)?,
    ))
}

/// Verdict report for a graph given as text or JSON.
#[pyfunction]
#[pyo3(signature = (graph, certificate = false, budget = DEFAULT_BUDGET))]
fn report(py: Python<'_>, graph: &str, certificate: bool, budget: usize) -> PyResult<String> {
    let g = parse_graph(graph).map_err(py_err)?;
    let opts = ReportOptions {
        moussong_limit: DEFAULT_MOUSSONG_LIMIT,
        certificate: certificate.then_some((RadiusPolicy::TwiceLabelPlusFour, budget)),
    };
    let r = py
        .detach(|| build_verdict_report(&g, opts))
        .map_err(py_err)?;
    Ok(to_sorted_json(&r))
}

#[pyfunction]
#[pyo3(signature = (graph, radius = None, budget = DEFAULT_BUDGET))]
fn certificate(
    py: Python<'_>,
    graph: &str,
    radius: Option<u32>,
    budget: usize,
) -> PyResult<String> {
    let g = parse_graph(graph).map_err(py_err)?;
    let policy = radius.map_or(RadiusPolicy::TwiceLabelPlusFour, RadiusPolicy::Fixed);
    let c = py
        .detach(|| cat0_report(&g, policy, budget, DEFAULT_MOUSSONG_LIMIT))
        .map_err(py_err)?;
    Ok(to_sorted_json(&c))
}

/// Summary of the coset-graph ball: (vertices, edges, girth, bipartite).
#[pyfunction]
#[pyo3(signature = (p, q, r, radius, budget = DEFAULT_BUDGET))]
fn theta_hat(
    py: Python<'_>,
    p: u32,
    q: u32,
    r: u32,
    radius: u32,
    budget: usize,
) -> PyResult<(usize, usize, Option<usize>, bool)> {
    let b = py
        .detach(|| build_theta_hat_ball(p, q, r, radius, budget))
        .map_err(py_err)?;
    Ok((
        b.vertex_count(),
        b.edges.len(),
        b.girth().map(|c| c.length),
        b.is_bipartite(),
    ))
}

#[pymodule]
fn shephard_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Session>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(girth, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    m.add_function(wrap_pyfunction!(certificate, m)?)?;
    m.add_function(wrap_pyfunction!(theta_hat, m)?)?;
    Ok(())
}

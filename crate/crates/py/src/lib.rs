//! Python bindings, importable as `ccwidth`.
//!
//! Graphs, covers, orientations, star certificates and decompositions are
//! wrapped as immutable classes; the searches release the GIL while they run.

use ccwidth::{
    Decomposition, Error, Format, Graph, OrderedCliqueCover, Orientation, RamseyAnswer, RamseyQuery, SearchLimits,
    StarCertificate,
};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(ccwidth, CcwidthError, PyException, "Base class for ccwidth errors.");
create_exception!(ccwidth, ParseError, CcwidthError, "Malformed graph or witness input.");
create_exception!(ccwidth, LimitExceededError, CcwidthError, "An exact search exceeded its limits.");
create_exception!(ccwidth, InvalidCoverError, CcwidthError, "A cover is not an ordered clique cover of the graph.");
create_exception!(ccwidth, RecognitionError, CcwidthError, "Input is not of the required graph class.");

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::LimitExceeded(_) => LimitExceededError::new_err(msg),
        Error::InvalidCover(_) => InvalidCoverError::new_err(msg),
        Error::Parse { .. } | Error::IndexOutOfRange { .. } | Error::SelfLoop(_) => ParseError::new_err(msg),
        Error::NotIncomparability | Error::NotTransitive(_) | Error::CyclicOrientation => {
            RecognitionError::new_err(msg)
        }
        _ => CcwidthError::new_err(msg),
    }
}

fn json_err(e: serde_json::Error) -> PyErr {
    ParseError::new_err(e.to_string())
}

fn limits(preset: SearchLimits, max_n: Option<usize>, time_ms: Option<u64>) -> SearchLimits {
    let mut l = preset;
    if let Some(n) = max_n {
        l.max_n = n;
    }
    if let Some(t) = time_ms {
        l.time_budget_ms = t;
    }
    l
}

/// Undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "ccwidth", frozen, from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self {
            inner: Graph::new(n, edges).map_err(to_py)?,
        })
    }

    /// Parses edge-list or JSON text; `format` is "auto", "edge-list" or "json".
    #[staticmethod]
    #[pyo3(signature = (text, format = "auto"))]
    fn parse(text: &str, format: &str) -> PyResult<Self> {
        let fmt = match format {
            "auto" => ccwidth::io::detect_format(text),
            other => other.parse::<Format>().map_err(to_py)?,
        };
        Ok(Self {
            inner: ccwidth::parse_graph(text, fmt).map_err(to_py)?,
        })
    }

    /// Serializes as "edge-list", "json" or "dot".
    #[pyo3(signature = (format = "edge-list"))]
    fn serialize(&self, format: &str) -> PyResult<String> {
        let fmt: Format = format.parse().map_err(to_py)?;
        Ok(ccwidth::serialize_graph(&self.inner, fmt))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(to_py)?;
        Ok(self.inner.neighbors(v).collect())
    }

    fn complement(&self) -> Self {
        Self {
            inner: self.inner.complement(),
        }
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.inner.components()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_clique(&self) -> bool {
        self.inner.is_clique()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

/// Sequence of disjoint cliques covering every vertex, in order.
#[pyclass(name = "OrderedCliqueCover", module = "ccwidth", frozen, from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PyCover {
    inner: OrderedCliqueCover,
}

#[pymethods]
impl PyCover {
    #[new]
    fn new(parts: Vec<Vec<usize>>) -> Self {
        Self {
            inner: OrderedCliqueCover::new(parts),
        }
    }

    #[staticmethod]
    fn trivial(g: &PyGraph) -> Self {
        Self {
            inner: ccwidth::trivial_cover(&g.inner),
        }
    }

    #[getter]
    fn parts(&self) -> Vec<Vec<usize>> {
        self.inner.parts().to_vec()
    }

    /// Largest part-index distance spanned by an edge of `g`.
    fn width(&self, g: &PyGraph) -> PyResult<usize> {
        ccwidth::cover_width(&g.inner, &self.inner).map_err(to_py)
    }

    /// Human-readable violations; empty when the cover is valid for `g`.
    fn violations(&self, g: &PyGraph) -> Vec<String> {
        ccwidth::validate_cover(&g.inner, &self.inner)
            .violations
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable")
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: serde_json::from_str(text).map_err(json_err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("OrderedCliqueCover({:?})", self.inner.parts())
    }
}

/// Directed graph, typically a transitive orientation of a complement.
#[pyclass(name = "Orientation", module = "ccwidth", frozen, from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PyOrientation {
    inner: Orientation,
}

#[pymethods]
impl PyOrientation {
    #[new]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self {
            inner: Orientation::new(n, arcs).map_err(to_py)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().collect()
    }

    fn is_transitive(&self) -> bool {
        ccwidth::verify_transitive(&self.inner)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable")
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: serde_json::from_str(text).map_err(json_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("Orientation(n={}, arcs={})", self.inner.n(), self.inner.arc_count())
    }
}

/// Induced star: a center and pairwise non-adjacent leaves.
#[pyclass(name = "StarCertificate", module = "ccwidth", frozen, from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PyStar {
    inner: StarCertificate,
}

#[pymethods]
impl PyStar {
    #[getter]
    fn center(&self) -> Option<usize> {
        (!self.inner.degenerate).then_some(self.inner.center)
    }

    #[getter]
    fn leaves(&self) -> Vec<usize> {
        self.inner.leaves.clone()
    }

    #[getter]
    fn degenerate(&self) -> bool {
        self.inner.degenerate
    }

    /// `None` when the certificate is an induced star of `g`, else the reason.
    fn check(&self, g: &PyGraph) -> Option<String> {
        self.inner.validate(&g.inner).err()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable")
    }

    fn __repr__(&self) -> String {
        if self.inner.degenerate {
            "StarCertificate(degenerate)".into()
        } else {
            format!("StarCertificate(center={}, leaves={:?})", self.inner.center, self.inner.leaves)
        }
    }
}

/// Factor graphs whose edge intersection is the source graph.
#[pyclass(name = "Decomposition", module = "ccwidth", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyDecomposition {
    inner: Decomposition,
}

#[pymethods]
impl PyDecomposition {
    #[getter]
    fn width(&self) -> usize {
        self.inner.width
    }

    #[getter]
    fn cover(&self) -> PyCover {
        PyCover {
            inner: self.inner.source_cover.clone(),
        }
    }

    fn factors(&self) -> Vec<PyGraph> {
        self.inner
            .factor_graphs()
            .into_iter()
            .map(|inner| PyGraph { inner })
            .collect()
    }

    /// "co_bipartite" or "terminal" per factor.
    fn kinds(&self) -> Vec<&'static str> {
        self.inner
            .factors
            .iter()
            .map(|f| match f.kind {
                ccwidth::FactorKind::CoBipartite => "co_bipartite",
                ccwidth::FactorKind::Terminal => "terminal",
            })
            .collect()
    }

    /// Runs the structural checks against `g`: maps check id to
    /// `(name, passed, detail)`.
    fn verify<'py>(&self, py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
        let report = ccwidth::verify_decomposition(&g.inner, &self.inner);
        let out = PyDict::new(py);
        for c in report.checks {
            out.set_item(c.id.to_string(), (c.name, c.passed, c.detail))?;
        }
        Ok(out)
    }

    fn factor_dot(&self, i: usize) -> PyResult<String> {
        if i >= self.inner.factors.len() {
            return Err(pyo3::exceptions::PyIndexError::new_err("factor index out of range"));
        }
        Ok(self.inner.factor_dot(i))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable")
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: serde_json::from_str(text).map_err(json_err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.factors.len()
    }

    fn __repr__(&self) -> String {
        format!("Decomposition(width={}, factors={})", self.inner.width, self.inner.factors.len())
    }
}

/// Exact clique cover width and an optimal cover.
#[pyfunction]
#[pyo3(signature = (g, max_n = None, time_ms = None))]
fn ccw_exact(py: Python<'_>, g: &PyGraph, max_n: Option<usize>, time_ms: Option<u64>) -> PyResult<(usize, PyCover)> {
    let l = limits(SearchLimits::ccw(), max_n, time_ms);
    let (w, inner) = py.detach(|| ccwidth::ccw_exact(&g.inner, &l)).map_err(to_py)?;
    Ok((w, PyCover { inner }))
}

#[pyfunction]
#[pyo3(signature = (g, max_n = None, time_ms = None))]
fn is_unit_incomparability(py: Python<'_>, g: &PyGraph, max_n: Option<usize>, time_ms: Option<u64>) -> PyResult<bool> {
    let l = limits(SearchLimits::ccw(), max_n, time_ms);
    py.detach(|| ccwidth::is_unit_incomparability(&g.inner, &l)).map_err(to_py)
}

/// Exact bandwidth and an optimal vertex ordering.
#[pyfunction]
#[pyo3(signature = (g, max_n = None, time_ms = None))]
fn bandwidth_exact(
    py: Python<'_>,
    g: &PyGraph,
    max_n: Option<usize>,
    time_ms: Option<u64>,
) -> PyResult<(usize, Vec<usize>)> {
    let l = limits(SearchLimits::bandwidth(), max_n, time_ms);
    let (w, order) = py.detach(|| ccwidth::bandwidth_exact(&g.inner, &l)).map_err(to_py)?;
    Ok((w, order.as_slice().to_vec()))
}

/// Largest induced star `s(g)` with a certificate.
#[pyfunction]
fn s_exact(py: Python<'_>, g: &PyGraph) -> PyResult<(usize, PyStar)> {
    let (s, inner) = py.detach(|| ccwidth::s_exact(&g.inner)).map_err(to_py)?;
    Ok((s, PyStar { inner }))
}

#[pyfunction]
#[pyo3(signature = (g, max_n = None, time_ms = None))]
fn udim_tiny(py: Python<'_>, g: &PyGraph, max_n: Option<usize>, time_ms: Option<u64>) -> PyResult<usize> {
    let l = limits(SearchLimits::udim(), max_n, time_ms);
    py.detach(|| ccwidth::udim_tiny(&g.inner, &l)).map_err(to_py)
}

/// A transitive orientation of `g`, or `None` if there is none.
#[pyfunction]
#[pyo3(signature = (g, max_n = None, time_ms = None))]
fn find_transitive_orientation(
    py: Python<'_>,
    g: &PyGraph,
    max_n: Option<usize>,
    time_ms: Option<u64>,
) -> PyResult<Option<PyOrientation>> {
    let l = limits(SearchLimits::orientation(), max_n, time_ms);
    let found = py
        .detach(|| ccwidth::find_transitive_orientation(&g.inner, &l))
        .map_err(to_py)?;
    Ok(found.map(|inner| PyOrientation { inner }))
}

#[pyfunction]
fn decompose(g: &PyGraph, cover: &PyCover) -> PyResult<PyDecomposition> {
    Ok(PyDecomposition {
        inner: ccwidth::decompose(&g.inner, &cover.inner).map_err(to_py)?,
    })
}

/// Layered greedy cover from a transitive orientation of the complement.
#[pyfunction]
#[pyo3(signature = (orientation, verify = true))]
fn greedy_layered_cover(orientation: &PyOrientation, verify: bool) -> PyResult<PyCover> {
    let lc = ccwidth::greedy_layered_cover(&orientation.inner, verify).map_err(to_py)?;
    Ok(PyCover { inner: lc.cover })
}

/// Bounds `(lower, upper)` on the clique cover width of an incomparability
/// graph, with the greedy cover and a star certificate for the lower bound.
#[pyfunction]
#[pyo3(signature = (g, orientation = None, verify = true, max_n = None))]
fn ccw_two_approx(
    py: Python<'_>,
    g: &PyGraph,
    orientation: Option<&PyOrientation>,
    verify: bool,
    max_n: Option<usize>,
) -> PyResult<(usize, usize, PyCover, PyStar)> {
    let l = limits(SearchLimits::orientation(), max_n, None);
    let r = py
        .detach(|| ccwidth::ccw_two_approx(&g.inner, orientation.map(|o| &o.inner), verify, &l))
        .map_err(to_py)?;
    Ok((
        r.lower,
        r.upper,
        PyCover { inner: r.witness_cover },
        PyStar { inner: r.witness_star },
    ))
}

/// Random incomparability graph with the transitive orientation of its complement.
#[pyfunction]
fn random_poset_graph(n: usize, density: f64, seed: u64) -> (PyGraph, PyOrientation) {
    let (g, o) = ccwidth::random_poset_graph(n, density, seed);
    (PyGraph { inner: g }, PyOrientation { inner: o })
}

fn answer_dict(py: Python<'_>, a: RamseyAnswer) -> PyResult<Bound<'_, PyDict>> {
    let d = PyDict::new(py);
    match a {
        RamseyAnswer::Exact { value } => {
            d.set_item("kind", "exact")?;
            d.set_item("value", value)?;
        }
        RamseyAnswer::Range { lo, hi } => {
            d.set_item("kind", "range")?;
            d.set_item("lo", lo)?;
            d.set_item("hi", hi)?;
        }
        RamseyAnswer::Unknown => d.set_item("kind", "unknown")?,
    }
    Ok(d)
}

/// Known value or bounds of `R(targets)`.
#[pyfunction]
fn ramsey_lookup(py: Python<'_>, targets: Vec<usize>) -> PyResult<Bound<'_, PyDict>> {
    let q = RamseyQuery::new(targets).map_err(to_py)?;
    answer_dict(py, ccwidth::ramsey_lookup(&q))
}

/// `R(3, ..., 3, 4)` for graphs of clique cover width `ccw`.
#[pyfunction]
fn corollary_bound(py: Python<'_>, ccw: usize) -> PyResult<Bound<'_, PyDict>> {
    answer_dict(py, ccwidth::corollary_bound(ccw).map_err(to_py)?)
}

#[pymodule(name = "ccwidth")]
fn ccwidth_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("CcwidthError", py.get_type::<CcwidthError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("LimitExceededError", py.get_type::<LimitExceededError>())?;
    m.add("InvalidCoverError", py.get_type::<InvalidCoverError>())?;
    m.add("RecognitionError", py.get_type::<RecognitionError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyCover>()?;
    m.add_class::<PyOrientation>()?;
    m.add_class::<PyStar>()?;
    m.add_class::<PyDecomposition>()?;
    m.add_function(wrap_pyfunction!(ccw_exact, m)?)?;
    m.add_function(wrap_pyfunction!(is_unit_incomparability, m)?)?;
    m.add_function(wrap_pyfunction!(bandwidth_exact, m)?)?;
    m.add_function(wrap_pyfunction!(s_exact, m)?)?;
    m.add_function(wrap_pyfunction!(udim_tiny, m)?)?;
    m.add_function(wrap_pyfunction!(find_transitive_orientation, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_layered_cover, m)?)?;
    m.add_function(wrap_pyfunction!(ccw_two_approx, m)?)?;
    m.add_function(wrap_pyfunction!(random_poset_graph, m)?)?;
    m.add_function(wrap_pyfunction!(ramsey_lookup, m)?)?;
    m.add_function(wrap_pyfunction!(corollary_bound, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

//! Python bindings for the treebound library.
//!
//! Exposes graphs and trees as classes plus the family constructors, the
//! leaf-relocation transformation, the enumerator and the verification
//! harness. Reports cross the boundary as plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use treebound_core::{centrality, enumerate, extremal, spanning, transform, verify};

fn to_py_err(err: treebound_core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn report_dict<'py>(
    py: Python<'py>,
    report: &centrality::CentralityReport,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("n", report.n)?;
    d.set_item("radius", report.radius)?;
    d.set_item("status", report.status)?;
    d.set_item("center", report.center.clone())?;
    d.set_item("medians", report.medians.clone())?;
    d.set_item("centroid", report.centroid.clone())?;
    let rows = PyList::empty(py);
    for row in &report.per_vertex {
        let r = PyDict::new(py);
        r.set_item("v", row.v)?;
        r.set_item("status", row.status)?;
        r.set_item("ecc", row.ecc)?;
        r.set_item("branch_weight", row.branch_weight)?;
        rows.append(r)?;
    }
    d.set_item("per_vertex", rows)?;
    Ok(d)
}

fn trace_list<'py>(
    py: Python<'py>,
    trace: &[transform::TraceEntry],
) -> PyResult<Bound<'py, PyList>> {
    let list = PyList::empty(py);
    for entry in trace {
        let e = PyDict::new(py);
        e.set_item("b", entry.b)?;
        e.set_item("u", entry.u)?;
        e.set_item("delta_status", entry.delta_status)?;
        e.set_item("case_tag", format!("{:?}", entry.case_tag))?;
        list.append(e)?;
    }
    Ok(list)
}

/// An undirected, simple, connected graph on vertices 0..n.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: treebound_core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: treebound_core::Graph::new(n, edges).map_err(to_py_err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degree(&self, v: usize) -> usize {
        self.inner.degree(v)
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree_shaped()
    }

    fn bfs_distances(&self, source: usize) -> PyResult<Vec<usize>> {
        self.inner.bfs_distances(source).map_err(to_py_err)
    }

    fn radius(&self) -> usize {
        centrality::radius(&self.inner).0
    }

    fn status(&self) -> usize {
        centrality::graph_status(&self.inner).0
    }

    fn report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        report_dict(py, &centrality::report(&self.inner))
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn bounds_report(&self) -> PyResult<String> {
        let report = spanning::graph_bounds_check(&self.inner).map_err(to_py_err)?;
        serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn spanning_tree(&self, preserve: &str) -> PyResult<PyTree> {
        let cert = match preserve {
            "radius" => spanning::radius_preserving_spanning_tree(&self.inner),
            "status" => spanning::status_preserving_spanning_tree(&self.inner),
            "degree" | "max_degree" => spanning::max_degree_spanning_tree(&self.inner),
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown preservation target {other:?}"
                )))
            }
        };
        Ok(PyTree { inner: cert.tree })
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

/// A tree: a connected graph with exactly n - 1 edges.
#[pyclass(name = "Tree", frozen)]
struct PyTree {
    inner: treebound_core::Tree,
}

#[pymethods]
impl PyTree {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyTree { inner: treebound_core::Tree::new(n, edges).map_err(to_py_err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degree(&self, v: usize) -> usize {
        self.inner.degree(v)
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn leaves(&self) -> PyResult<Vec<usize>> {
        self.inner.leaves().map_err(to_py_err)
    }

    fn radius(&self) -> usize {
        centrality::radius(&self.inner).0
    }

    fn status(&self) -> usize {
        centrality::graph_status(&self.inner).0
    }

    fn centroid(&self) -> Vec<usize> {
        centrality::centroid(&self.inner)
    }

    fn branch_weights(&self) -> Vec<usize> {
        centrality::branch_weights(&self.inner)
    }

    fn report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        report_dict(py, &centrality::report(&self.inner))
    }

    fn canonical_code(&self) -> Vec<u8> {
        enumerate::canonical_code(&self.inner).as_bytes().to_vec()
    }

    fn is_k_balanced(&self) -> Option<usize> {
        extremal::is_k_balanced(&self.inner)
    }

    fn is_comet(&self, kind: &str) -> PyResult<bool> {
        let kind = match kind {
            "comet" => extremal::CometKind::Comet,
            "scomet" => extremal::CometKind::SComet,
            "cstar" => extremal::CometKind::CStar,
            other => return Err(PyValueError::new_err(format!("unknown comet kind {other:?}"))),
        };
        Ok(extremal::is_comet(&self.inner, kind))
    }

    fn relocate_leaf(&self, b: usize, u: usize) -> PyResult<PyTree> {
        let moved = transform::relocate_leaf(&self.inner, transform::RelocationMove { b, u })
            .map_err(to_py_err)?;
        Ok(PyTree { inner: moved })
    }

    /// Predicted centroid member of the tree after relocating leaf b to u,
    /// judged from centroid vertex x: a (vertex, case) pair.
    fn predict_centroid(&self, x: usize, b: usize, u: usize) -> PyResult<(usize, String)> {
        let p = transform::predict_centroid(&self.inner, x, transform::RelocationMove { b, u })
            .map_err(to_py_err)?;
        Ok((p.vertex, format!("{:?}", p.case)))
    }

    /// Closed-form status change of relocating leaf b to u, judged from
    /// centroid vertex x.
    fn status_delta(&self, x: usize, b: usize, u: usize) -> PyResult<i64> {
        transform::status_delta(&self.inner, x, transform::RelocationMove { b, u })
            .map_err(to_py_err)
    }

    fn minimize_status<'py>(&self, py: Python<'py>) -> PyResult<(PyTree, Bound<'py, PyList>)> {
        let (tree, trace) = transform::minimize_status(&self.inner).map_err(to_py_err)?;
        Ok((PyTree { inner: tree }, trace_list(py, &trace)?))
    }

    fn maximize_status<'py>(&self, py: Python<'py>) -> PyResult<(PyTree, Bound<'py, PyList>)> {
        let (tree, trace) = transform::maximize_status(&self.inner).map_err(to_py_err)?;
        Ok((PyTree { inner: tree }, trace_list(py, &trace)?))
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!("Tree(n={})", self.inner.n())
    }
}

#[pyfunction]
fn parse_edge_list(text: &str) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: treebound_core::Graph::parse_edge_list(text).map_err(to_py_err)? })
}

#[pyfunction]
fn parse_tree(text: &str) -> PyResult<PyTree> {
    Ok(PyTree { inner: treebound_core::Tree::parse_edge_list(text).map_err(to_py_err)? })
}

#[pyfunction]
#[pyo3(signature = (n, k, variant = 0))]
fn build_balanced(n: usize, k: usize, variant: usize) -> PyResult<PyTree> {
    Ok(PyTree { inner: extremal::build_balanced(n, k, variant).map_err(to_py_err)? })
}

#[pyfunction]
#[pyo3(signature = (n, k, hub_position = 1))]
fn build_comet(n: usize, k: usize, hub_position: usize) -> PyResult<PyTree> {
    Ok(PyTree { inner: extremal::build_comet(n, k, hub_position).map_err(to_py_err)? })
}

#[pyfunction]
fn build_s_comet(n: usize, k: usize) -> PyResult<PyTree> {
    Ok(PyTree { inner: extremal::build_s_comet(n, k).map_err(to_py_err)? })
}

#[pyfunction]
#[pyo3(signature = (n, k, variant = 0))]
fn build_c_star(n: usize, k: usize, variant: usize) -> PyResult<PyTree> {
    Ok(PyTree { inner: extremal::build_c_star(n, k, variant).map_err(to_py_err)? })
}

#[pyfunction]
fn status_bounds(n: usize, k: usize) -> PyResult<(usize, usize)> {
    extremal::status_bounds(n, k).map_err(to_py_err)
}

#[pyfunction]
fn radius_bounds(n: usize, k: usize) -> PyResult<(usize, usize)> {
    Ok((
        extremal::radius_lower_bound(n, k).map_err(to_py_err)?,
        extremal::radius_upper_bound(n, k).map_err(to_py_err)?,
    ))
}

#[pyfunction]
fn free_tree_count(n: usize) -> PyResult<usize> {
    Ok(enumerate::free_trees(n).map_err(to_py_err)?.count())
}

#[pyfunction]
fn free_trees(n: usize) -> PyResult<Vec<PyTree>> {
    Ok(enumerate::free_trees(n)
        .map_err(to_py_err)?
        .map(|t| PyTree { inner: t })
        .collect())
}

#[pyfunction]
fn are_isomorphic(a: &PyTree, b: &PyTree) -> bool {
    enumerate::are_isomorphic(&a.inner, &b.inner)
}

#[pyfunction]
fn random_connected_graph(n: usize, extra_edges: usize, seed: u64) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: enumerate::random_connected_graph(n, extra_edges, seed).map_err(to_py_err)?,
    })
}

/// Runs one theorem (or "all") and returns the JSON report string with
/// timing redacted, as the CLI does.
#[pyfunction]
#[pyo3(signature = (theorem, n_max, seed = 1, jobs = 1))]
fn run_verification(theorem: &str, n_max: usize, seed: u64, jobs: usize) -> PyResult<String> {
    let opts = verify::VerifyOptions { n_max, seed, jobs };
    if theorem.eq_ignore_ascii_case("all") {
        let reports = verify::verify_all(&opts).map_err(to_py_err)?;
        Ok(verify::reports_to_json(&reports, &opts, false))
    } else {
        let id: verify::TheoremId = theorem.parse().map_err(PyValueError::new_err)?;
        let report = verify::verify(id, &opts).map_err(to_py_err)?;
        Ok(report.to_json(false))
    }
}

#[pymodule]
fn treebound_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyTree>()?;
    m.add_function(wrap_pyfunction!(parse_edge_list, m)?)?;
    m.add_function(wrap_pyfunction!(parse_tree, m)?)?;
    m.add_function(wrap_pyfunction!(build_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(build_comet, m)?)?;
    m.add_function(wrap_pyfunction!(build_s_comet, m)?)?;
    m.add_function(wrap_pyfunction!(build_c_star, m)?)?;
    m.add_function(wrap_pyfunction!(status_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(radius_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(free_tree_count, m)?)?;
    m.add_function(wrap_pyfunction!(free_trees, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(random_connected_graph, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    Ok(())
}

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use modwidth::engine::OracleMode;
use modwidth::generators::{self, GenSpec};
use modwidth::problem::{reference_answer, solve_problem};
use modwidth::{Answer, Error, Problem, System};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Input(_) | Error::Parse { .. } | Error::UnknownProblem(_) | Error::UnknownSystem(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn answer_to_py(py: Python<'_>, a: Answer) -> PyResult<Py<PyAny>> {
    Ok(match a {
        Answer::Value(v) => v.into_pyobject(py)?.into_any().unbind(),
        Answer::Exists(b) => b.into_pyobject(py)?.to_owned().into_any().unbind(),
        Answer::NoSolution => py.None(),
    })
}

fn mode(membership: bool) -> OracleMode {
    if membership {
        OracleMode::membership()
    } else {
        OracleMode::Function
    }
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", frozen, from_py_object)]
#[derive(Clone)]
struct PyGraph(modwidth::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        modwidth::Graph::from_edges(n, &edges).map(PyGraph).map_err(to_py)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        modwidth::Graph::parse_edge_list(text).map(PyGraph).map_err(to_py)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.0.n() && v < self.0.n() && self.0.has_edge(u, v)
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn to_edge_list(&self) -> String {
        self.0.to_edge_list()
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.n(), self.0.edge_count())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// Modular decomposition tree.
#[pyclass(name = "MdTree", frozen)]
struct PyMdTree(modwidth::MdTree);

#[pymethods]
impl PyMdTree {
    #[getter]
    fn modular_width(&self) -> usize {
        self.0.modular_width()
    }

    fn serialize(&self) -> String {
        self.0.serialize()
    }

    /// `(kind, sorted module, child ids)` per node, root first.
    fn nodes(&self) -> Vec<(String, Vec<usize>, Vec<usize>)> {
        self.0
            .nodes
            .iter()
            .map(|nd| (nd.kind.to_string(), nd.module.as_slice().to_vec(), nd.children.clone()))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("MdTree(nodes={}, mw={})", self.0.nodes.len(), self.0.modular_width())
    }
}

#[pyfunction]
fn decompose(g: &PyGraph) -> PyMdTree {
    PyMdTree(modwidth::decompose(&g.0))
}

#[pyfunction]
fn modular_width(g: &PyGraph) -> usize {
    modwidth::decompose(&g.0).modular_width()
}

/// Solves `problem` with the oracle engine. Returns an int, a bool for the
/// Hamiltonicity problems, or None when no solution exists.
#[pyfunction]
#[pyo3(signature = (problem, g, membership=false))]
fn solve(py: Python<'_>, problem: &str, g: &PyGraph, membership: bool) -> PyResult<Py<PyAny>> {
    let p: Problem = problem.parse().map_err(to_py)?;
    let run = solve_problem(p, &g.0, mode(membership)).map_err(to_py)?;
    answer_to_py(py, run.answer)
}

/// Same answer by exhaustive search; small graphs only.
#[pyfunction]
fn solve_bruteforce(py: Python<'_>, problem: &str, g: &PyGraph) -> PyResult<Py<PyAny>> {
    let p: Problem = problem.parse().map_err(to_py)?;
    answer_to_py(py, reference_answer(p, &g.0).map_err(to_py)?)
}

/// The value tuple of a system together with the query transcript dump.
#[pyfunction]
#[pyo3(signature = (system, g, membership=false))]
fn system_values(system: &str, g: &PyGraph, membership: bool) -> PyResult<(Vec<u64>, String)> {
    let s: System = system.parse().map_err(to_py)?;
    let (tuple, tr) = modwidth::solve(&g.0, s, mode(membership)).map_err(to_py)?;
    Ok((tuple.0, tr.dump()))
}

#[pyfunction]
fn problems() -> Vec<&'static str> {
    Problem::ALL.iter().map(|p| p.id()).collect()
}

/// Random graph of modular-width at most `k`; `k = 0` gives a cograph.
#[pyfunction]
#[pyo3(signature = (n, k=0, seed=0))]
fn generate(n: usize, k: usize, seed: u64) -> PyResult<PyGraph> {
    generators::random_bounded_mw(&GenSpec::new(n, k, seed)).map(PyGraph).map_err(to_py)
}

#[pyfunction]
fn random_graph(n: usize, p: f64, seed: u64) -> PyResult<PyGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(PyValueError::new_err("p must lie in [0, 1]"));
    }
    generators::random_graph(n, p, seed).map(PyGraph).map_err(to_py)
}

#[pymodule]
pub fn modwidth_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyMdTree>()?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(modular_width, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(solve_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(system_values, m)?)?;
    m.add_function(wrap_pyfunction!(problems, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(random_graph, m)?)?;
    Ok(())
}

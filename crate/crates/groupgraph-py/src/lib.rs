//! Python bindings for the group-graph library.
//!
//! Exposes `Group` and `Graph` classes plus a few module-level helpers.
//! Structured results (invariant reports, theorem reports, the chain
//! formula) cross the boundary as plain dicts/lists with the same shape as
//! the CLI's JSON output.

use std::collections::BTreeMap;
use std::str::FromStr;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use groupgraph::classify::{
    is_eppo, maximal_cyclic_subgroups, verify_theorems, TheoremId,
};
use groupgraph::cli::{catalog_specs, parse_group_spec};
use groupgraph::graph::{
    difference_graph, directed_power_graph, graphs_equal as compare_graphs, prime_graph,
};
use groupgraph::invariants::{
    invariant_report, power_omega_chi_formula, PerfectnessParams, SolverParams,
};
use groupgraph::{build_graph, build_group, BuildKind, FiniteGroup, Graph, IdentityPolicy};

fn val_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Recursively convert a JSON value into Python objects.
fn json_to_py<'py>(py: Python<'py>, value: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match value {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => {
            if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any()
            } else if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any()
            }
        }
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (key, item) in map {
                dict.set_item(key, json_to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn serialize_to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    json_to_py(py, &serde_json::to_value(value).map_err(val_err)?)
}

/// A finite group held as its full multiplication table. Elements are the
/// integers `0..order`, with `0` the identity.
#[pyclass(frozen, name = "Group")]
pub struct PyGroup {
    inner: FiniteGroup,
}

impl PyGroup {
    fn check_element(&self, x: usize) -> PyResult<()> {
        if x < self.inner.order() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!(
                "element {x} out of range for a group of order {}",
                self.inner.order()
            )))
        }
    }
}

#[pymethods]
impl PyGroup {
    /// Build a group from a spec string such as `"C12"`, `"S4"`, `"Q8xC3"`
    /// or `"C7:C3"`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let spec = parse_group_spec(spec).map_err(val_err)?;
        Ok(PyGroup { inner: build_group(&spec).map_err(val_err)? })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn exponent(&self) -> u64 {
        self.inner.exponent()
    }

    #[getter]
    fn identity(&self) -> usize {
        self.inner.identity()
    }

    fn mul(&self, x: usize, y: usize) -> PyResult<usize> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.inner.mul(x, y))
    }

    fn inverse(&self, x: usize) -> PyResult<usize> {
        self.check_element(x)?;
        Ok(self.inner.inverse(x))
    }

    fn power(&self, x: usize, k: u64) -> PyResult<usize> {
        self.check_element(x)?;
        Ok(self.inner.power(x, k))
    }

    fn element_order(&self, x: usize) -> PyResult<u64> {
        self.check_element(x)?;
        Ok(self.inner.element_order(x))
    }

    fn commutes(&self, x: usize, y: usize) -> PyResult<bool> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.inner.commutes(x, y))
    }

    fn center(&self) -> Vec<usize> {
        self.inner.center().members().to_vec()
    }

    /// Map from element order to how many elements have that order.
    fn order_spectrum(&self) -> BTreeMap<u64, usize> {
        self.inner.order_spectrum()
    }

    /// Whether every element order is a prime power.
    fn is_eppo(&self) -> bool {
        is_eppo(&self.inner)
    }

    /// The maximal cyclic subgroups, each as a sorted element list.
    fn maximal_cyclic_subgroups(&self) -> Vec<Vec<usize>> {
        maximal_cyclic_subgroups(&self.inner)
            .iter()
            .map(|s| s.members().to_vec())
            .collect()
    }

    /// The divisor-chain value predicting clique and chromatic number of
    /// the power graph, as a dict with `exponent`, `value` and `chain`.
    fn chain_formula<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        serialize_to_py(py, &power_omega_chi_formula(&self.inner))
    }

    /// Build one of the graphs on this group: `"power"`, `"enhanced"`,
    /// `"commuting"` or `"prime"`. The identity vertex is kept unless
    /// `include_identity=False` (not applicable to the prime graph).
    #[pyo3(signature = (kind, include_identity = None))]
    fn graph(&self, kind: &str, include_identity: Option<bool>) -> PyResult<PyGraph> {
        let policy = match include_identity {
            Some(false) => IdentityPolicy::Exclude,
            _ => IdentityPolicy::Include,
        };
        let inner = match kind {
            "power" => build_graph(&self.inner, BuildKind::Power, policy),
            "enhanced" => build_graph(&self.inner, BuildKind::Enhanced, policy),
            "commuting" => build_graph(&self.inner, BuildKind::Commuting, policy),
            "prime" => {
                if include_identity == Some(false) {
                    return Err(PyValueError::new_err(
                        "the identity policy does not apply to the prime graph",
                    ));
                }
                prime_graph(&self.inner).map_err(val_err)?
            }
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown graph kind {other:?}; expected power, enhanced, commuting or prime"
                )))
            }
        };
        Ok(PyGraph { inner })
    }

    /// Arcs `(u, v)` with `u` a proper power of `v`, sorted.
    fn directed_power_arcs(&self) -> Vec<(u64, u64)> {
        directed_power_graph(&self.inner).arcs()
    }

    /// Check the structural statements on this group. `theorems` is a list
    /// of theorem ids (see `theorem_ids()`); `None` checks all of them.
    /// Returns one report dict per theorem, in canonical order.
    #[pyo3(signature = (theorems = None))]
    fn verify<'py>(
        &self,
        py: Python<'py>,
        theorems: Option<Vec<String>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let selection: Vec<TheoremId> = match theorems {
            None => TheoremId::ALL.to_vec(),
            Some(names) => names
                .iter()
                .map(|name| TheoremId::from_str(name))
                .collect::<Result<_, _>>()
                .map_err(val_err)?,
        };
        let reports = verify_theorems(
            &self.inner,
            &selection,
            &SolverParams::default(),
            &PerfectnessParams::default(),
        )
        .map_err(val_err)?;
        serialize_to_py(py, &reports)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Group({:?})", self.inner.label())
    }
}

/// An undirected graph on group elements (or primes, for the prime graph).
/// Vertices are addressed by their labels.
#[pyclass(frozen, name = "Graph")]
pub struct PyGraph {
    inner: Graph,
}

impl PyGraph {
    fn index_of(&self, label: u64) -> PyResult<usize> {
        self.inner
            .labels()
            .iter()
            .position(|&l| l == label)
            .ok_or_else(|| PyValueError::new_err(format!("no vertex labelled {label}")))
    }
}

#[pymethods]
impl PyGraph {
    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind().name()
    }

    #[getter]
    fn includes_identity(&self) -> bool {
        self.inner.identity_policy() == IdentityPolicy::Include
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn labels(&self) -> Vec<u64> {
        self.inner.labels().to_vec()
    }

    /// All edges as sorted `(u, v)` label pairs with `u < v`.
    fn edges(&self) -> Vec<(u64, u64)> {
        self.inner.edges()
    }

    fn are_adjacent(&self, u: u64, v: u64) -> PyResult<bool> {
        Ok(self.inner.are_adjacent(self.index_of(u)?, self.index_of(v)?))
    }

    fn degree(&self, v: u64) -> PyResult<usize> {
        Ok(self.inner.degree(self.index_of(v)?))
    }

    /// Exact invariants as a dict: clique number (with witness), chromatic
    /// number, independence number, domination, diameter, component count
    /// and the perfectness probe verdict.
    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = invariant_report(
            &self.inner,
            &SolverParams::default(),
            &PerfectnessParams::default(),
        )
        .map_err(val_err)?;
        serialize_to_py(py, &report)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(kind={:?}, vertices={}, edges={})",
            self.inner.kind().name(),
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Whether two graphs have the same vertex labels and the same edges.
#[pyfunction]
fn graphs_equal(a: PyRef<'_, PyGraph>, b: PyRef<'_, PyGraph>) -> PyResult<bool> {
    Ok(compare_graphs(&a.inner, &b.inner).map_err(val_err)?.is_equal())
}

/// The graph whose edges are those of `a` not present in `b`.
#[pyfunction]
fn difference(a: PyRef<'_, PyGraph>, b: PyRef<'_, PyGraph>) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: difference_graph(&a.inner, &b.inner).map_err(val_err)? })
}

/// Labels of every catalog group of order at most `max_order`.
#[pyfunction]
fn catalog_labels(max_order: u64) -> PyResult<Vec<String>> {
    Ok(catalog_specs(max_order)
        .map_err(val_err)?
        .iter()
        .map(|spec| spec.to_string())
        .collect())
}

/// The theorem ids accepted by `Group.verify`, in canonical order.
#[pyfunction]
fn theorem_ids() -> Vec<&'static str> {
    TheoremId::ALL.iter().map(|t| t.name()).collect()
}

/// Exact graph constructions and invariants for small finite groups.
#[pymodule(name = "groupgraph")]
fn module_init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(graphs_equal, m)?)?;
    m.add_function(wrap_pyfunction!(difference, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_labels, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_ids, m)?)?;
    Ok(())
}

//! Python bindings for the `centracover` crate.
//!
//! Structured results cross the boundary as JSON and are handed back as
//! plain dicts and lists.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;

use ::centracover::covers::{self, CoverFamily, SweepConfig};
use ::centracover::group::{self as grp, DEFAULT_CLOSURE_CAP};
use ::centracover::{catalog, classify, dot, report, CentralizerAtlas, CentralizerGraph};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn check_elem(g: &grp::Group, x: usize) -> PyResult<()> {
    if x < g.order() {
        Ok(())
    } else {
        Err(value_error(format!(
            "element {x} out of range for order {}",
            g.order()
        )))
    }
}

/// A finite group given by its multiplication table.
#[pyclass(name = "Group", frozen)]
struct PyGroup {
    inner: Arc<grp::Group>,
}

#[pymethods]
impl PyGroup {
    /// Builds a member of the built-in catalog.
    #[staticmethod]
    fn from_catalog(name: &str) -> PyResult<Self> {
        let g = catalog::build(name).map_err(value_error)?;
        Ok(PyGroup { inner: Arc::new(g) })
    }

    /// Parses a Cayley-table or permutation-generator JSON document.
    #[staticmethod]
    #[pyo3(signature = (text, closure_cap = DEFAULT_CLOSURE_CAP))]
    fn from_json(text: &str, closure_cap: usize) -> PyResult<Self> {
        let g = grp::load_group_json(text, closure_cap).map_err(value_error)?;
        Ok(PyGroup { inner: Arc::new(g) })
    }

    /// Closure of 0-based permutation images.
    #[staticmethod]
    #[pyo3(signature = (degree, generators, closure_cap = DEFAULT_CLOSURE_CAP))]
    fn from_permutations(
        degree: usize,
        generators: Vec<Vec<usize>>,
        closure_cap: usize,
    ) -> PyResult<Self> {
        let g =
            grp::load_permutation_group(degree, &generators, closure_cap).map_err(value_error)?;
        Ok(PyGroup { inner: Arc::new(g) })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!(
            "Group({:?}, order={})",
            self.inner.name(),
            self.inner.order()
        )
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn label(&self, x: usize) -> PyResult<String> {
        check_elem(&self.inner, x)?;
        Ok(self.inner.label(x).to_string())
    }

    fn multiply(&self, a: usize, b: usize) -> PyResult<usize> {
        self.inner.multiply(a, b).map_err(value_error)
    }

    fn inverse(&self, a: usize) -> PyResult<usize> {
        self.inner.inverse(a).map_err(value_error)
    }

    fn element_order(&self, a: usize) -> PyResult<usize> {
        self.inner.element_order(a).map_err(value_error)
    }

    fn center(&self) -> Vec<usize> {
        self.inner.center().to_vec()
    }

    fn centralizer(&self, x: usize) -> PyResult<Vec<usize>> {
        check_elem(&self.inner, x)?;
        Ok(self.inner.centralizer_of_element(x).to_vec())
    }

    /// Z(x), the center of the centralizer of x.
    fn element_center(&self, x: usize) -> PyResult<Vec<usize>> {
        check_elem(&self.inner, x)?;
        Ok(self.inner.element_center(x).to_vec())
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian_group()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner.to_document()).map_err(value_error)
    }
}

/// Distinct centralizers and centers of a nonabelian group, with the
/// centralizer graph.
#[pyclass(name = "Atlas", frozen)]
struct PyAtlas {
    atlas: CentralizerAtlas,
    graph: CentralizerGraph,
}

fn parse_side(side: &str) -> PyResult<bool> {
    match side {
        "centralizers" => Ok(false),
        "centers" => Ok(true),
        other => Err(value_error(format!(
            "side must be 'centralizers' or 'centers', not {other:?}"
        ))),
    }
}

#[pymethods]
impl PyAtlas {
    #[new]
    fn new(group: &PyGroup) -> PyResult<Self> {
        let atlas = CentralizerAtlas::build(group.inner.clone()).map_err(value_error)?;
        let graph = CentralizerGraph::build(&atlas);
        Ok(PyAtlas { atlas, graph })
    }

    fn __len__(&self) -> usize {
        self.atlas.len()
    }

    #[getter]
    fn group(&self) -> PyGroup {
        PyGroup {
            inner: self.atlas.group_arc().clone(),
        }
    }

    fn summary<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.atlas.summary())
    }

    fn centralizer(&self, entry: usize) -> PyResult<Vec<usize>> {
        self.check_entry(entry)?;
        Ok(self.atlas.entry(entry).centralizer.to_vec())
    }

    fn center(&self, entry: usize) -> PyResult<Vec<usize>> {
        self.check_entry(entry)?;
        Ok(self.atlas.entry(entry).center.to_vec())
    }

    fn maximal_centralizers(&self) -> Vec<usize> {
        self.atlas.maximal_centralizer_ids().to_vec()
    }

    fn minimal_centralizers(&self) -> Vec<usize> {
        self.atlas.minimal_centralizer_ids().to_vec()
    }

    fn maximal_centers(&self) -> Vec<usize> {
        self.atlas.maximal_center_ids()
    }

    /// Cover and irredundance verdict for a family of entry ids.
    #[pyo3(signature = (entries, side = "centralizers"))]
    fn cover_verdict<'py>(
        &self,
        py: Python<'py>,
        entries: Vec<usize>,
        side: &str,
    ) -> PyResult<Bound<'py, PyAny>> {
        let fam = if parse_side(side)? {
            CoverFamily::centers(entries)
        } else {
            CoverFamily::centralizers(entries)
        };
        let verdict = match covers::is_irredundant_cover(&self.atlas, &fam) {
            Ok(v) => v,
            Err(covers::CoverError::NotACover { .. }) => {
                covers::is_cover(&self.atlas, &fam).map_err(value_error)?
            }
            Err(e) => return Err(value_error(e)),
        };
        to_py(py, &verdict)
    }

    fn graph_edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    fn is_dominating(&self, entries: Vec<usize>) -> PyResult<bool> {
        Ok(self
            .graph
            .is_dominating(&entries)
            .map_err(value_error)?
            .is_dominating)
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &classify::classify(&self.atlas))
    }

    /// The full analysis report.
    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &report::analyze(&self.atlas, &self.graph))
    }

    /// Runs the theorem registry, or the listed ids.
    #[pyo3(signature = (theorems = None, subset_cap = covers::DEFAULT_SUBSET_CAP))]
    fn verify<'py>(
        &self,
        py: Python<'py>,
        theorems: Option<Vec<String>>,
        subset_cap: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        if let Some(ids) = &theorems {
            let known = report::registry_ids();
            if let Some(bad) = ids.iter().find(|id| !known.contains(&id.as_str())) {
                return Err(value_error(format!("unknown theorem id {bad:?}")));
            }
        }
        let r = report::run_theorems(
            &self.atlas,
            &self.graph,
            SweepConfig::with_cap(subset_cap),
            theorems.as_deref(),
            false,
        );
        to_py(py, &r)
    }

    fn dot_hasse(&self) -> String {
        dot::hasse(&self.atlas)
    }

    fn dot_graph(&self) -> String {
        dot::graph(&self.atlas, &self.graph)
    }
}

impl PyAtlas {
    fn check_entry(&self, entry: usize) -> PyResult<()> {
        if entry < self.atlas.len() {
            Ok(())
        } else {
            Err(value_error(format!("no entry with id {entry}")))
        }
    }
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    catalog::list()
}

#[pyfunction]
fn registry_ids() -> Vec<&'static str> {
    report::registry_ids()
}

#[pymodule]
fn centracover(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyAtlas>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(registry_ids, m)?)?;
    Ok(())
}

//! Python module `frieze`.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use frieze_core::growth::{self, GrowthMethod, PeriodMode};
use frieze_core::quiver;
use frieze_core::triangulation::{triangulation_from_quiddity, Boundary, QuiddityPair};
use frieze_core::tube::{self, TubeCheck, TubeModuleIndex};
use frieze_core::verify::{self, VerifyConfig};
use frieze_core::{frieze as frieze_rows, FriezeError, NonOrientedCycle, QuidditySequence, SkeletalTriangulation};

create_exception!(frieze, FriezeException, PyValueError, "Domain error; the message starts with the error name.");

fn err(e: FriezeError) -> PyErr {
    FriezeException::new_err(format!("{}: {e}", e.name()))
}

fn boundary(name: &str) -> PyResult<Boundary> {
    match name {
        "outer" | "B1" => Ok(Boundary::Outer),
        "inner" | "B2" => Ok(Boundary::Inner),
        other => Err(PyValueError::new_err(format!("unknown boundary {other:?}, use 'outer' or 'inner'"))),
    }
}

#[pyclass(name = "QuidditySequence", module = "frieze", from_py_object)]
#[derive(Clone)]
struct PyQuiddity {
    inner: QuidditySequence,
}

impl From<QuidditySequence> for PyQuiddity {
    fn from(inner: QuidditySequence) -> Self {
        PyQuiddity { inner }
    }
}

#[pymethods]
impl PyQuiddity {
    #[new]
    fn new(entries: Vec<u64>) -> PyResult<Self> {
        QuidditySequence::new(entries).map(Into::into).map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse::<QuidditySequence>().map(Into::into).map_err(err)
    }

    #[getter]
    fn entries(&self) -> Vec<u64> {
        self.inner.entries().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QuidditySequence([{}])", self.inner.to_string().replace(',', ", "))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn canonical_rotation(&self) -> Self {
        self.inner.canonical_rotation().into()
    }

    fn cyclically_equal(&self, other: &Self) -> bool {
        self.inner.cyclically_equal(&other.inner)
    }

    fn is_skeletal(&self) -> bool {
        self.inner.is_skeletal()
    }

    fn is_trivial(&self) -> bool {
        self.inner.is_trivial()
    }

    fn classify(&self) -> String {
        format!("{:?}", self.inner.classify())
    }

    fn reduce_once(&self, index: usize) -> PyResult<Self> {
        self.inner.reduce_once(index).map(Into::into).map_err(err)
    }

    fn reduce_to_skeletal(&self) -> PyResult<Self> {
        self.inner.reduce_to_skeletal().map(Into::into).map_err(err)
    }

    fn reverse_reduce(&self, gap: usize) -> Self {
        self.inner.reverse_reduce(gap).into()
    }

    /// List of `(head, run)` pairs.
    fn block_form(&self) -> PyResult<Vec<(u64, usize)>> {
        let form = self.inner.block_form().map_err(err)?;
        Ok(form.blocks.iter().map(|b| (b.head, b.run)).collect())
    }

    fn partner(&self) -> PyResult<Self> {
        self.inner.partner().map(Into::into).map_err(err)
    }

    fn entry(&self, i: i64, j: i64) -> PyResult<BigInt> {
        frieze_rows::entry(&self.inner, i, j).map_err(err)
    }

    /// The first `depth` non-trivial rows.
    #[pyo3(signature = (depth = 10))]
    fn rows(&self, depth: usize) -> PyResult<Vec<Vec<BigInt>>> {
        frieze_rows::rows(&self.inner, depth).map(|r| r.rows).map_err(err)
    }

    #[pyo3(signature = (depth = 10))]
    fn render_rows(&self, depth: usize) -> PyResult<String> {
        frieze_rows::rows(&self.inner, depth).map(|r| r.render_text()).map_err(err)
    }

    /// `method` is "rows" or "formula".
    #[pyo3(signature = (method = "rows"))]
    fn growth_coefficient(&self, method: &str) -> PyResult<BigInt> {
        match method {
            "rows" => growth::growth_coefficient_rows(&self.inner).map_err(err),
            "formula" => growth::growth_coefficient_formula(&self.inner).map_err(err),
            other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
        }
    }

    /// `[s_1, ..., s_r]` of the minimal period.
    fn growth_sequence(&self, r: usize) -> PyResult<Vec<BigInt>> {
        growth::growth_sequence(&self.inner, r, PeriodMode::Minimal).map_err(err)
    }

    fn minimal_period(&self) -> usize {
        growth::minimal_period(&self.inner)
    }

    /// Growth report as a JSON string.
    #[pyo3(signature = (r = 3))]
    fn growth_report(&self, r: usize) -> PyResult<String> {
        let report = growth::growth_report(&self.inner, r, GrowthMethod::Both).map_err(err)?;
        Ok(serde_json::to_string(&report).expect("serializable"))
    }

    fn quiver(&self) -> PyResult<PyCycle> {
        quiver::mu(&self.inner).map(|inner| PyCycle { inner }).map_err(err)
    }

    fn triangulation(&self) -> PyResult<PyTriangulation> {
        triangulation_from_quiddity(&self.inner)
            .map(|inner| PyTriangulation { inner })
            .map_err(err)
    }

    fn cc_value(&self, i: i64, j: i64) -> PyResult<BigInt> {
        let m = TubeModuleIndex::new(self.inner.len(), i, j).map_err(err)?;
        tube::cc_value(&self.inner, &m).map_err(err)
    }

    fn repth_rhs(&self, i: i64, t: usize) -> PyResult<BigInt> {
        tube::repth_rhs(&self.inner, i, t).map_err(err)
    }

    /// `check` is "repth", "growth" or "ar"; returns the list of failing
    /// `(start, level)` pairs.
    #[pyo3(signature = (check, max_level = 12))]
    fn check_tube(&self, check: &str, max_level: usize) -> PyResult<Vec<(i64, usize)>> {
        let check = match check {
            "repth" => TubeCheck::Repth,
            "growth" => TubeCheck::Growth,
            "ar" => TubeCheck::Ar,
            other => return Err(PyValueError::new_err(format!("unknown check {other:?}"))),
        };
        let report = tube::check_tube(&self.inner, check, max_level).map_err(err)?;
        Ok(report.failures.iter().map(|c| (c.start, c.level)).collect())
    }
}

#[pyclass(name = "NonOrientedCycle", module = "frieze", from_py_object)]
#[derive(Clone)]
struct PyCycle {
    inner: NonOrientedCycle,
}

#[pymethods]
impl PyCycle {
    #[new]
    fn new(word: &str) -> PyResult<Self> {
        word.parse().map(|inner| PyCycle { inner }).map_err(err)
    }

    #[staticmethod]
    fn from_quiddity(q: &PyQuiddity) -> PyResult<Self> {
        q.quiver()
    }

    #[getter]
    fn word(&self) -> String {
        self.inner.to_string()
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("NonOrientedCycle('{}')", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn sigma(&self) -> PyQuiddity {
        self.inner.sigma().into()
    }

    fn sigma_tilde(&self) -> PyQuiddity {
        self.inner.sigma_tilde().into()
    }

    fn canonicalize(&self) -> Self {
        PyCycle { inner: self.inner.canonicalize() }
    }

    fn is_isomorphic(&self, other: &Self) -> bool {
        self.inner.is_isomorphic(&other.inner)
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }
}

#[pyclass(name = "SkeletalTriangulation", module = "frieze", from_py_object)]
#[derive(Clone)]
struct PyTriangulation {
    inner: SkeletalTriangulation,
}

#[pymethods]
impl PyTriangulation {
    #[staticmethod]
    fn from_quiddity(q: &PyQuiddity) -> PyResult<Self> {
        q.triangulation()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(|inner| PyTriangulation { inner })
            .map_err(|e| FriezeException::new_err(format!("InvalidTriangulation: {e}")))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable")
    }

    #[getter]
    fn outer_count(&self) -> usize {
        self.inner.outer_count()
    }

    #[getter]
    fn inner_count(&self) -> usize {
        self.inner.inner_count()
    }

    #[getter]
    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().iter().map(|a| (a.outer, a.inner)).collect()
    }

    fn with_inner_offset(&self, shift: usize) -> Self {
        PyTriangulation { inner: self.inner.with_inner_offset(shift) }
    }

    fn quiddity_pair(&self) -> (PyQuiddity, PyQuiddity) {
        let (outer, inner) = self.inner.quiddity_pair();
        (outer.into(), inner.into())
    }

    fn quiver(&self) -> PyCycle {
        PyCycle { inner: self.inner.quiver() }
    }

    fn render_svg(&self) -> String {
        self.inner.render_svg()
    }

    fn write_svg(&self, path: &str) -> PyResult<()> {
        self.inner.write_svg(std::path::Path::new(path)).map_err(err)
    }

    fn render_net(&self) -> String {
        self.inner.render_net()
    }
}

/// Glue an ear onto one side of a quiddity pair.
#[pyfunction]
fn attach_ear(outer: &PyQuiddity, inner: &PyQuiddity, side: &str, gap: usize) -> PyResult<(PyQuiddity, PyQuiddity)> {
    let pair = QuiddityPair::new(outer.inner.clone(), inner.inner.clone()).attach_ear(boundary(side)?, gap);
    Ok((pair.outer.into(), pair.inner.into()))
}

/// Remove the ear at entry `index` of one side of a quiddity pair.
#[pyfunction]
fn detach_ear(outer: &PyQuiddity, inner: &PyQuiddity, side: &str, index: usize) -> PyResult<(PyQuiddity, PyQuiddity)> {
    let pair = QuiddityPair::new(outer.inner.clone(), inner.inner.clone())
        .detach_ear(boundary(side)?, index)
        .map_err(err)?;
    Ok((pair.outer.into(), pair.inner.into()))
}

#[pyfunction]
fn growth_closed_form(s1: BigInt, r: u32) -> PyResult<BigInt> {
    if r == 0 {
        return Err(PyValueError::new_err("r must be at least 1"));
    }
    Ok(growth::growth_closed_form(&s1, r))
}

#[pyfunction]
fn cyclic_pair_excluding_count(n: usize) -> usize {
    frieze_rows::cyclic_pair_excluding_subsets(n).len()
}

#[pyfunction]
fn pair_excluding_count(n: usize) -> usize {
    frieze_rows::pair_excluding_subsets(n).len()
}

/// Run the verification suites; returns `(name, cases, failures)` triples.
#[pyfunction]
#[pyo3(signature = (seed = None, quick = true))]
fn verify_all(py: Python<'_>, seed: Option<u64>, quick: bool) -> Vec<(String, u64, u64)> {
    let mut config = VerifyConfig::default();
    if let Some(seed) = seed {
        config.seed = seed;
    }
    let outcomes = py.detach(|| {
        if quick {
            let small = VerifyConfig { oracle_samples: 4, growth_samples: 200, ..config };
            vec![
                verify::reference_values(),
                verify::oracle_equivalence(&small),
                verify::growth_equivalence(&small),
                verify::bijections(7),
                verify::skeleton_commutation(6, 2),
                verify::tube_identities(5, 3),
                verify::negative_controls(),
            ]
        } else {
            verify::run_all(&config)
        }
    });
    outcomes.into_iter().map(|o| (o.name, o.cases, o.failures)).collect()
}

#[pymodule]
fn frieze(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("FriezeError", m.py().get_type::<FriezeException>())?;
    m.add_class::<PyQuiddity>()?;
    m.add_class::<PyCycle>()?;
    m.add_class::<PyTriangulation>()?;
    m.add_function(wrap_pyfunction!(attach_ear, m)?)?;
    m.add_function(wrap_pyfunction!(detach_ear, m)?)?;
    m.add_function(wrap_pyfunction!(growth_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_pair_excluding_count, m)?)?;
    m.add_function(wrap_pyfunction!(pair_excluding_count, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}

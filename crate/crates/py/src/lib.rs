//! Python bindings: the `numsg` extension module.
//!
//! Sets cross the boundary as `NumericalSet` objects. Functions that need a
//! semigroup accept any `NumericalSet` and raise `ValueError` when it is not
//! closed under addition.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use numsg::enumeration::{build_tables, enumerate_by_frobenius, enumerate_by_genus, CountTable};
use numsg::families::{
    family_as_enumerate, family_counts, family_general_enumerate, parse_rational, FamilyKind,
};
use numsg::transforms;
use numsg::verify::{run_all, VerifyConfig};

fn err(e: numsg::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(
    name = "NumericalSet",
    module = "numsg",
    frozen,
    eq,
    hash,
    ord,
    str,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PySet(numsg::NumericalSet);

impl std::fmt::Display for PySet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl PySet {
    fn semigroup(&self) -> PyResult<numsg::NumericalSemigroup> {
        numsg::NumericalSemigroup::try_from(self.0.clone()).map_err(err)
    }
}

impl From<numsg::NumericalSet> for PySet {
    fn from(s: numsg::NumericalSet) -> Self {
        PySet(s)
    }
}

impl From<numsg::NumericalSemigroup> for PySet {
    fn from(s: numsg::NumericalSemigroup) -> Self {
        PySet(s.into_set())
    }
}

#[pymethods]
impl PySet {
    /// Builds the set whose gaps are `gaps`.
    #[new]
    #[pyo3(signature = (gaps=Vec::new()))]
    fn new(gaps: Vec<i64>) -> PyResult<Self> {
        numsg::NumericalSet::from_gaps(gaps).map(PySet).map_err(err)
    }

    /// Parses `gaps=1,2,4` or `gens=3,5`.
    #[staticmethod]
    fn parse(spec: &str) -> PyResult<Self> {
        spec.parse().map(PySet).map_err(err)
    }

    /// The semigroup generated by `gens`.
    #[staticmethod]
    fn from_generators(gens: Vec<i64>) -> PyResult<Self> {
        let list = numsg::GeneratorList::new(gens).map_err(err)?;
        numsg::NumericalSemigroup::from_generators(&list)
            .map(PySet::from)
            .map_err(err)
    }

    #[getter]
    fn frobenius(&self) -> i64 {
        self.0.frobenius()
    }

    #[getter]
    fn genus(&self) -> i64 {
        self.0.genus()
    }

    #[getter]
    fn multiplicity(&self) -> i64 {
        self.0.multiplicity()
    }

    #[getter]
    fn gaps(&self) -> Vec<i64> {
        self.0.gap_list()
    }

    #[getter]
    fn is_semigroup(&self) -> bool {
        self.0.is_closed()
    }

    fn __contains__(&self, x: i64) -> bool {
        self.0.contains(x)
    }

    fn __repr__(&self) -> String {
        format!("NumericalSet('{}')", self.0)
    }

    fn minimal_generators(&self) -> PyResult<Vec<i64>> {
        Ok(self.semigroup()?.minimal_generators())
    }

    fn pseudo_frobenius(&self) -> PyResult<Vec<i64>> {
        transforms::pseudo_frobenius(&self.0).map_err(err)
    }

    #[getter]
    #[pyo3(name = "type")]
    fn type_(&self) -> PyResult<i64> {
        transforms::type_of(&self.0).map_err(err)
    }

    fn t_set(&self) -> PyResult<PySet> {
        transforms::t_set(&self.0).map(PySet).map_err(err)
    }

    fn associated(&self) -> PySet {
        transforms::associated(&self.0).into()
    }

    fn a_star(&self) -> PyResult<PySet> {
        transforms::a_star(&self.0).map(PySet::from).map_err(err)
    }

    /// `H, T(H), T²(H), ...` ending at ℕ.
    fn t_chain(&self) -> Vec<PySet> {
        transforms::t_chain(&self.0)
            .into_iter()
            .map(PySet)
            .collect()
    }

    fn chain_length(&self) -> i64 {
        transforms::big_l(&self.0)
    }

    fn ordinarization(&self) -> PyResult<PySet> {
        transforms::ordinarization(&self.0).map(PySet).map_err(err)
    }

    fn adjoin_frobenius(&self) -> PyResult<PySet> {
        transforms::adjoin_frobenius_set(&self.0)
            .map(PySet)
            .map_err(err)
    }

    fn b_set(&self) -> PyResult<Vec<i64>> {
        transforms::b_set(&self.semigroup()?).map_err(err)
    }

    fn is_symmetric(&self) -> PyResult<bool> {
        transforms::is_symmetric(&self.semigroup()?).map_err(err)
    }

    fn is_almost_symmetric(&self) -> PyResult<bool> {
        transforms::is_almost_symmetric(&self.semigroup()?).map_err(err)
    }

    fn is_max_ed(&self) -> PyResult<bool> {
        transforms::is_max_ed(&self.semigroup()?).map_err(err)
    }

    fn is_staircase(&self) -> PyResult<bool> {
        transforms::is_staircase(&self.semigroup()?).map_err(err)
    }
}

fn parity_map(table: &CountTable) -> BTreeMap<i64, (u64, u64)> {
    table.parity_rollup()
}

fn workers(n: Option<usize>) -> usize {
    n.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1)
}

fn check_bound(name: &str, value: i64) -> PyResult<()> {
    if (1..=60).contains(&value) {
        Ok(())
    } else {
        Err(PyValueError::new_err(format!(
            "{name} must be between 1 and 60, got {value}"
        )))
    }
}

/// Number of semigroups with genus `g`.
#[pyfunction]
fn count_by_genus(g: i64) -> u64 {
    enumerate_by_genus(g, |_| {})
}

/// Number of semigroups with Frobenius number `f`.
#[pyfunction]
fn count_by_frobenius(f: i64) -> u64 {
    enumerate_by_frobenius(f, |_| {})
}

/// `{F: (odd, even)}` type parities for `1 <= F <= max_f`.
#[pyfunction]
#[pyo3(signature = (max_f, workers=None))]
fn parity_by_frobenius(
    py: Python<'_>,
    max_f: i64,
    workers: Option<usize>,
) -> PyResult<BTreeMap<i64, (u64, u64)>> {
    check_bound("max_f", max_f)?;
    let w = self::workers(workers);
    Ok(py.detach(|| parity_map(&build_tables(max_f, 1, w).by_frobenius)))
}

/// `{g: (odd, even)}` type parities for `1 <= g <= max_g`.
#[pyfunction]
#[pyo3(signature = (max_g, workers=None))]
fn parity_by_genus(
    py: Python<'_>,
    max_g: i64,
    workers: Option<usize>,
) -> PyResult<BTreeMap<i64, (u64, u64)>> {
    check_bound("max_g", max_g)?;
    let w = self::workers(workers);
    Ok(py.detach(|| parity_map(&build_tables(1, max_g, w).by_genus)))
}

/// `{(F, t): count}` for every semigroup with `1 <= F <= max_f`.
#[pyfunction]
#[pyo3(signature = (max_f, almost_symmetric=false, workers=None))]
fn type_counts_by_frobenius(
    py: Python<'_>,
    max_f: i64,
    almost_symmetric: bool,
    workers: Option<usize>,
) -> PyResult<BTreeMap<(i64, i64), u64>> {
    check_bound("max_f", max_f)?;
    let w = self::workers(workers);
    let tables = py.detach(|| build_tables(max_f, 1, w));
    let table = if almost_symmetric {
        &tables.almost_symmetric_by_frobenius
    } else {
        &tables.by_frobenius
    };
    Ok(table.rows().map(|(f, t, c)| ((f, t), c)).collect())
}

/// Members of the almost symmetric family with Frobenius number `f`.
#[pyfunction]
fn family_as(f: i64, k: i64) -> PyResult<Vec<PySet>> {
    Ok(family_as_enumerate(f, k)
        .map_err(err)?
        .into_iter()
        .map(PySet::from)
        .collect())
}

/// Members of the general family; `beta` is an exact rational such as `"43/100+1/1000000"`.
#[pyfunction]
fn family_general(f: i64, k: i64, beta: &str) -> PyResult<Vec<PySet>> {
    let beta = parse_rational(beta).map_err(err)?;
    Ok(family_general_enumerate(f, k, beta)
        .map_err(err)?
        .into_iter()
        .map(PySet::from)
        .collect())
}

/// `(count, observed types, all almost symmetric)` for a family.
#[pyfunction]
#[pyo3(signature = (kind, f, k, beta=None))]
fn family_summary(
    kind: &str,
    f: i64,
    k: i64,
    beta: Option<&str>,
) -> PyResult<(u64, Vec<i64>, bool)> {
    let kind = match kind {
        "as" => FamilyKind::AlmostSymmetric,
        "gen" => FamilyKind::General,
        other => {
            return Err(PyValueError::new_err(format!(
                "family kind must be 'as' or 'gen', got {other:?}"
            )))
        }
    };
    let beta = beta.map(parse_rational).transpose().map_err(err)?;
    let r = family_counts(kind, f, k, beta, 0).map_err(err)?;
    Ok((
        r.count,
        r.observed_types.into_iter().collect(),
        r.all_almost_symmetric,
    ))
}

/// Runs every exhaustive check; returns `(name, passed, cases, failures)` rows.
#[pyfunction]
#[pyo3(signature = (mode="fast"))]
fn verify(py: Python<'_>, mode: &str) -> PyResult<Vec<(String, bool, u64, u64)>> {
    let cfg = match mode {
        "fast" => VerifyConfig::fast(),
        "full" => VerifyConfig::full(),
        other => {
            return Err(PyValueError::new_err(format!(
                "mode must be 'fast' or 'full', got {other:?}"
            )))
        }
    };
    let results = py.detach(|| run_all(&cfg));
    Ok(results
        .into_iter()
        .map(|r| (r.name.clone(), r.passed(), r.cases, r.failure_count))
        .collect())
}

/// Adds the classes and functions to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySet>()?;
    m.add_function(wrap_pyfunction!(count_by_genus, m)?)?;
    m.add_function(wrap_pyfunction!(count_by_frobenius, m)?)?;
    m.add_function(wrap_pyfunction!(parity_by_frobenius, m)?)?;
    m.add_function(wrap_pyfunction!(parity_by_genus, m)?)?;
    m.add_function(wrap_pyfunction!(type_counts_by_frobenius, m)?)?;
    m.add_function(wrap_pyfunction!(family_as, m)?)?;
    m.add_function(wrap_pyfunction!(family_general, m)?)?;
    m.add_function(wrap_pyfunction!(family_summary, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

#[pymodule]
#[pyo3(name = "numsg")]
fn numsg_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}

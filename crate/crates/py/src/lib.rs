use pyo3::exceptions::{PyArithmeticError, PyLookupError, PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use dyck_odd::oeis::{self, Source};
use dyck_odd::verify::{self, Fault};
use dyck_odd::{automaton, kernel, oracle};
use dyck_odd::{CountTable, Error, Layer, OeisError, PathClass, Series};
use num_bigint::{BigInt, BigUint};

fn err(e: impl Into<Error>) -> PyErr {
    match e.into() {
        Error::Series(e) => PyArithmeticError::new_err(e.to_string()),
        Error::Kernel(e) => PyArithmeticError::new_err(e.to_string()),
        Error::Oeis(OeisError::NotFound(id)) => PyLookupError::new_err(id),
        Error::Oeis(e @ (OeisError::NetworkError { .. } | OeisError::Io(_))) => {
            PyOSError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

fn class(name: &str) -> PyResult<PathClass> {
    name.parse()
        .map_err(|e: dyck_odd::class::UnknownClass| PyValueError::new_err(e.to_string()))
}

fn layer(name: &str) -> PyResult<Layer> {
    name.parse().map_err(PyValueError::new_err)
}

/// Truncated Laurent series with exact rational coefficients.
#[pyclass(name = "Series", frozen, module = "dyck_odd")]
struct PySeries {
    inner: Series,
}

impl From<Series> for PySeries {
    fn from(inner: Series) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PySeries {
    #[getter]
    fn valuation(&self) -> i64 {
        self.inner.valuation()
    }

    #[getter]
    fn precision(&self) -> i64 {
        self.inner.precision()
    }

    /// Coefficient of z^n as a `fractions.Fraction`.
    fn coeff<'py>(&self, py: Python<'py>, n: i64) -> PyResult<Bound<'py, PyAny>> {
        let c = self.inner.coeff(n).map_err(err)?;
        let fraction = py.import("fractions")?.getattr("Fraction")?;
        fraction.call1((c.numer().clone(), c.denom().clone()))
    }

    /// Integer coefficients of z^start .. z^(stop-1).
    fn integer_coefficients(&self, start: i64, stop: i64) -> PyResult<Vec<BigInt>> {
        self.inner.integer_coeffs(start, stop).map_err(err)
    }

    /// Reindexes an even series in z as a series in Z = z^2.
    fn decimate(&self) -> PyResult<PySeries> {
        Ok(self.inner.decimate().map_err(err)?.into())
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    #[pyo3(signature = (var = "z"))]
    fn render(&self, var: &str) -> String {
        self.inner.render(var)
    }

    fn __add__(&self, other: &PySeries) -> PySeries {
        (&self.inner + &other.inner).into()
    }

    fn __sub__(&self, other: &PySeries) -> PySeries {
        (&self.inner - &other.inner).into()
    }

    fn __mul__(&self, other: &PySeries) -> PySeries {
        (&self.inner * &other.inner).into()
    }

    fn __truediv__(&self, other: &PySeries) -> PyResult<PySeries> {
        Ok(self.inner.div(&other.inner).map_err(err)?.into())
    }

    fn __eq__(&self, other: &PySeries) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.inner)
    }
}

type Row = (usize, &'static str, usize, BigUint);

fn rows(t: &CountTable) -> Vec<Row> {
    t.entries()
        .map(|(n, s, c)| (n, s.layer.name(), s.height, c.clone()))
        .collect()
}

/// Automaton counts as (n, layer, height, count) tuples.
#[pyfunction]
fn dp_counts(class_name: &str, n_max: usize) -> PyResult<Vec<Row>> {
    Ok(rows(&automaton::dp_counts(class(class_name)?, n_max)))
}

/// Brute-force counts, same shape as `dp_counts`.
#[pyfunction]
fn oracle_counts(class_name: &str, n_max: usize) -> PyResult<Vec<Row>> {
    Ok(rows(
        &oracle::oracle_counts(class(class_name)?, n_max).map_err(err)?,
    ))
}

#[pyfunction]
fn count_complete(class_name: &str, m: u64) -> PyResult<BigUint> {
    automaton::count_complete(class(class_name)?, m).map_err(err)
}

/// Complete-path counts for semilengths 1..=n_max/2.
#[pyfunction]
fn complete_counts(class_name: &str, n_max: usize) -> PyResult<Vec<BigUint>> {
    Ok(automaton::dp_counts(class(class_name)?, n_max).complete_counts())
}

#[pyfunction]
fn partial_series(
    class_name: &str,
    layer_name: &str,
    height: usize,
    n_max: usize,
) -> PyResult<PySeries> {
    Ok(automaton::partial_series(class(class_name)?, layer(layer_name)?, height, n_max).into())
}

#[pyfunction]
fn solve_v1(precision: i64) -> PyResult<PySeries> {
    Ok(kernel::solve_v1(precision).map_err(err)?.into())
}

#[pyfunction]
fn g0_closed(precision: i64) -> PyResult<PySeries> {
    Ok(kernel::g0_closed(precision).map_err(err)?.into())
}

#[pyfunction]
fn h0_closed(precision: i64) -> PyResult<PySeries> {
    Ok(kernel::h0_closed(precision).map_err(err)?.into())
}

#[pyfunction]
fn g0_plus_h0_closed(precision: i64) -> PyResult<PySeries> {
    Ok(kernel::g0_plus_h0_closed(precision).map_err(err)?.into())
}

#[pyfunction]
fn partial_closed(layer_name: &str, j: u32, precision: i64) -> PyResult<PySeries> {
    Ok(kernel::partial_closed(layer(layer_name)?, j, precision)
        .map_err(err)?
        .into())
}

/// Bonus-class boundary series as a dict with keys f1, g1, h1, g0.
#[pyfunction]
fn bonus_closed<'py>(py: Python<'py>, precision: i64) -> PyResult<Bound<'py, PyDict>> {
    let b = kernel::bonus_closed(precision).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("f1", PySeries::from(b.f1))?;
    d.set_item("g1", PySeries::from(b.g1))?;
    d.set_item("h1", PySeries::from(b.h1))?;
    d.set_item("g0", PySeries::from(b.g0))?;
    Ok(d)
}

#[pyfunction]
fn residue_cubic(g0: &PySeries) -> PySeries {
    kernel::residue_cubic(&g0.inner).into()
}

#[pyfunction]
fn residue_functional(g0: &PySeries) -> PySeries {
    kernel::residue_functional(&g0.inner).into()
}

/// Loads a bundled (or `DYCK_ODD_FIXTURES`) b-file: returns (offset, terms).
#[pyfunction]
fn load_sequence(id: &str) -> PyResult<(i64, Vec<BigInt>)> {
    let rec = oeis::load(id, &Source::fixture_from_env()).map_err(err)?;
    Ok((rec.offset, rec.terms))
}

/// Compares a series in Z with a sequence; returns the first mismatching
/// index, or None when all `count` terms agree.
#[pyfunction]
#[pyo3(signature = (series, id, count, start_power = None))]
fn compare(
    series: &PySeries,
    id: &str,
    count: usize,
    start_power: Option<i64>,
) -> PyResult<Option<i64>> {
    let rec = oeis::load(id, &Source::fixture_from_env()).map_err(err)?;
    let start = start_power.unwrap_or(rec.offset);
    let report = oeis::compare(&series.inner, &rec, start, count).map_err(err)?;
    Ok(report.first_mismatch())
}

/// Runs a check suite ("identities", "triple-agreement" or "all"); returns
/// (name, passed, precision, detail) tuples.
#[pyfunction]
#[pyo3(signature = (suite = "all", n_max = 22, precision = 26))]
fn run_checks(
    suite: &str,
    n_max: usize,
    precision: i64,
) -> PyResult<Vec<(String, bool, String, String)>> {
    let mut checks = Vec::new();
    match suite {
        "identities" | "triple-agreement" | "all" => {}
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    }
    if suite != "triple-agreement" {
        checks.extend(verify::identities(precision, Fault::None).map_err(err)?);
    }
    if suite != "identities" {
        checks.extend(verify::triple_agreement(n_max, Fault::None).map_err(err)?);
    }
    Ok(checks
        .into_iter()
        .map(|c| (c.name, c.passed, c.precision, c.detail))
        .collect())
}

#[pymodule]
#[pyo3(name = "dyck_odd")]
fn dyck_odd_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySeries>()?;
    m.add_function(wrap_pyfunction!(dp_counts, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_counts, m)?)?;
    m.add_function(wrap_pyfunction!(count_complete, m)?)?;
    m.add_function(wrap_pyfunction!(complete_counts, m)?)?;
    m.add_function(wrap_pyfunction!(partial_series, m)?)?;
    m.add_function(wrap_pyfunction!(solve_v1, m)?)?;
    m.add_function(wrap_pyfunction!(g0_closed, m)?)?;
    m.add_function(wrap_pyfunction!(h0_closed, m)?)?;
    m.add_function(wrap_pyfunction!(g0_plus_h0_closed, m)?)?;
    m.add_function(wrap_pyfunction!(partial_closed, m)?)?;
    m.add_function(wrap_pyfunction!(bonus_closed, m)?)?;
    m.add_function(wrap_pyfunction!(residue_cubic, m)?)?;
    m.add_function(wrap_pyfunction!(residue_functional, m)?)?;
    m.add_function(wrap_pyfunction!(load_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    Ok(())
}

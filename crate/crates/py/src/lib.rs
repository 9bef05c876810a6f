//! Python bindings: the field/polynomial/ideal types plus the report-level
//! driver functions. Exact values cross the boundary as strings in the same
//! text grammar the CLI uses; reports arrive as plain dicts.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use sympow::driver::{self, CheckMethod, CheckStatus};
use sympow::error::Error;
use sympow::field::Field as CoreField;
use sympow::groebner::Ideal as CoreIdeal;
use sympow::monomial::MonomialOrder;
use sympow::parse::parse_poly;
use sympow::poly::{Polynomial as CorePoly, Ring};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn json_to_py(py: Python<'_>, v: &serde_json::Value) -> PyResult<Py<PyAny>> {
    Ok(match v {
        serde_json::Value::Null => py.None(),
        serde_json::Value::Bool(b) => b.into_pyobject(py)?.to_owned().unbind().into(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.unbind().into()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.unbind().into()
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.unbind().into()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.unbind().into(),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.unbind().into()
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, val) in map {
                dict.set_item(k, json_to_py(py, val)?)?;
            }
            dict.unbind().into()
        }
    })
}

fn report_to_py(py: Python<'_>, report: &driver::Report) -> PyResult<Py<PyAny>> {
    let value = serde_json::to_value(report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, &value)
}

/// A coefficient field: `Q`, `GF(p)`, `GF(p)[c]` or `Q[c]`.
#[pyclass(name = "Field", frozen, from_py_object)]
#[derive(Clone)]
struct PyField {
    inner: CoreField,
}

#[pymethods]
impl PyField {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        Ok(PyField {
            inner: CoreField::parse(spec).map_err(to_py_err)?,
        })
    }

    fn characteristic(&self) -> u64 {
        self.inner.characteristic()
    }

    /// Roots of `t^2 + t + 2` in the field, as element strings.
    fn roots_of_klein_quadratic(&self) -> Vec<String> {
        self.inner
            .roots_of_klein_quadratic()
            .iter()
            .map(|r| self.inner.format_element(r))
            .collect()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Field('{}')", self.inner)
    }
}

/// A polynomial in `x, y, z` over a declared field.
#[pyclass(name = "Polynomial", frozen, from_py_object)]
#[derive(Clone)]
struct PyPolynomial {
    inner: CorePoly,
}

impl PyPolynomial {
    fn wrap(inner: CorePoly) -> Self {
        PyPolynomial { inner }
    }
}

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(field: &PyField, text: &str) -> PyResult<Self> {
        let ring = Ring::xyz(field.inner);
        Ok(PyPolynomial::wrap(parse_poly(&ring, text).map_err(to_py_err)?))
    }

    fn __add__(&self, other: &PyPolynomial) -> PyResult<Self> {
        Ok(PyPolynomial::wrap(self.inner.add(&other.inner).map_err(to_py_err)?))
    }

    fn __sub__(&self, other: &PyPolynomial) -> PyResult<Self> {
        Ok(PyPolynomial::wrap(self.inner.sub(&other.inner).map_err(to_py_err)?))
    }

    fn __mul__(&self, other: &PyPolynomial) -> PyResult<Self> {
        Ok(PyPolynomial::wrap(self.inner.mul(&other.inner).map_err(to_py_err)?))
    }

    fn __neg__(&self) -> Self {
        PyPolynomial::wrap(self.inner.neg())
    }

    fn __pow__(&self, exp: u32, _mod: Option<u32>) -> Self {
        PyPolynomial::wrap(self.inner.pow(exp))
    }

    fn __eq__(&self, other: &PyPolynomial) -> bool {
        self.inner == other.inner
    }

    fn degree(&self) -> Option<u32> {
        self.inner.degree()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    /// Exact evaluation; coordinates are element strings like `2/3` or `c`.
    fn evaluate(&self, point: Vec<String>) -> PyResult<String> {
        let ring = self.inner.ring().clone();
        let field = ring.field();
        let coords = point
            .iter()
            .map(|s| {
                parse_poly(&ring, s).map_err(to_py_err).and_then(|p| {
                    if p.degree().unwrap_or(0) > 0 {
                        Err(PyValueError::new_err("coordinates must be constants"))
                    } else {
                        Ok(p.coeff(&sympow::monomial::Monomial::one()))
                    }
                })
            })
            .collect::<PyResult<Vec<_>>>()?;
        let value = self.inner.evaluate(&coords).map_err(to_py_err)?;
        Ok(field.format_element(&value))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.inner)
    }
}

/// An ideal of `K[x, y, z]` with the engine's toolkit behind it.
#[pyclass(name = "Ideal", frozen)]
struct PyIdeal {
    field: CoreField,
    inner: CoreIdeal,
}

impl PyIdeal {
    fn wrap(field: CoreField, inner: CoreIdeal) -> Self {
        PyIdeal { field, inner }
    }
}

#[pymethods]
impl PyIdeal {
    #[new]
    fn new(field: &PyField, gens: Vec<String>) -> PyResult<Self> {
        let ring = Ring::xyz(field.inner);
        let gens = gens
            .iter()
            .map(|s| parse_poly(&ring, s).map_err(to_py_err))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyIdeal::wrap(field.inner, CoreIdeal::new(ring, gens)))
    }

    fn gens(&self) -> Vec<String> {
        self.inner.gens().iter().map(|g| g.to_string()).collect()
    }

    /// The reduced Groebner basis under grevlex.
    fn groebner(&self) -> Vec<String> {
        self.inner
            .groebner_basis(MonomialOrder::Grevlex)
            .iter()
            .map(|g| g.to_string())
            .collect()
    }

    fn contains(&self, poly: &str) -> PyResult<bool> {
        let ring = Ring::xyz(self.field);
        let p = parse_poly(&ring, poly).map_err(to_py_err)?;
        Ok(self.inner.contains(&p))
    }

    fn equals(&self, other: &PyIdeal) -> bool {
        self.inner.equals(&other.inner)
    }

    fn power(&self, k: u32) -> Self {
        PyIdeal::wrap(self.field, self.inner.power(k))
    }

    fn intersect(&self, other: &PyIdeal) -> PyResult<Self> {
        Ok(PyIdeal::wrap(
            self.field,
            self.inner.intersect(&other.inner).map_err(to_py_err)?,
        ))
    }

    fn colon(&self, poly: &str) -> PyResult<Self> {
        let ring = Ring::xyz(self.field);
        let p = parse_poly(&ring, poly).map_err(to_py_err)?;
        Ok(PyIdeal::wrap(
            self.field,
            self.inner.colon_poly(&p).map_err(to_py_err)?,
        ))
    }

    /// Saturation by the irrelevant ideal `(x, y, z)`.
    fn saturate_irrelevant(&self) -> PyResult<Self> {
        let ring = self.inner.ring().clone();
        let m = CoreIdeal::new(ring.clone(), (0..3).map(|i| ring.var(i)).collect());
        Ok(PyIdeal::wrap(
            self.field,
            self.inner.saturate(&m).map_err(to_py_err)?,
        ))
    }

    /// The symbolic power `I^(m)` as saturation of `I^m`.
    fn symbolic_power(&self, m: u32) -> PyResult<Self> {
        PyIdeal::wrap(self.field, self.inner.power(m)).saturate_irrelevant()
    }

    fn multiplicity(&self) -> PyResult<u32> {
        self.inner.multiplicity().map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("Ideal(<{} generators over {}>)", self.inner.gens().len(), self.field)
    }
}

/// Containment check: returns the full report as a dict; raises on
/// disagreement between methods.
#[pyfunction]
#[pyo3(signature = (target, field=None, m=3, r=2, method="both"))]
fn check(
    py: Python<'_>,
    target: &str,
    field: Option<&str>,
    m: u32,
    r: u32,
    method: &str,
) -> PyResult<Py<PyAny>> {
    let method = CheckMethod::parse(method).map_err(to_py_err)?;
    let (report, status) = driver::run_check(target, field, m, r, method).map_err(to_py_err)?;
    if status == CheckStatus::Disagreement {
        return Err(PyValueError::new_err(
            "criterion and oracle disagree; this is a correctness alarm",
        ));
    }
    report_to_py(py, &report)
}

#[pyfunction]
#[pyo3(signature = (target, field=None))]
fn points(py: Python<'_>, target: &str, field: Option<&str>) -> PyResult<Py<PyAny>> {
    report_to_py(py, &driver::run_points(target, field).map_err(to_py_err)?)
}

#[pyfunction]
#[pyo3(signature = (target, field=None))]
fn witness(py: Python<'_>, target: &str, field: Option<&str>) -> PyResult<Py<PyAny>> {
    report_to_py(py, &driver::run_witness(target, field).map_err(to_py_err)?)
}

#[pyfunction]
#[pyo3(signature = (target, field=None))]
fn syzygy(py: Python<'_>, target: &str, field: Option<&str>) -> PyResult<Py<PyAny>> {
    report_to_py(py, &driver::run_syzygy(target, field).map_err(to_py_err)?)
}

#[pyfunction]
#[pyo3(signature = (target, field=None, power=3))]
fn resolve(py: Python<'_>, target: &str, field: Option<&str>, power: u32) -> PyResult<Py<PyAny>> {
    report_to_py(py, &driver::run_resolve(target, field, power).map_err(to_py_err)?)
}

#[pymodule]
fn sympow_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyIdeal>()?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(points, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(syzygy, m)?)?;
    m.add_function(wrap_pyfunction!(resolve, m)?)?;
    Ok(())
}

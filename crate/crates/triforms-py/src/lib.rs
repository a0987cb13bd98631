//! Python bindings for the triforms library.
//!
//! Exposes the exact q-series type, mixed representation-number forms, eta
//! quotients with the holomorphy check, and the basis solver. All
//! coefficients cross the boundary as `fractions.Fraction`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use triforms::basis::{catalogued_spaces, sturm_bound, table_columns};
use triforms::descriptor::parse_form;
use triforms::etaq::EtaQuotient;
use triforms::forms::MixedForm;
use triforms::qseries::{psi_series, theta_series, Series24};
use triforms::solve::{express_in_table_columns, formula_for_columns};
use triforms::Rat;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A truncated formal power series on the q^(1/24) grid with exact
/// rational coefficients.
#[pyclass(name = "Series24", skip_from_py_object)]
#[derive(Clone)]
struct PySeries24 {
    inner: Series24,
}

#[pymethods]
impl PySeries24 {
    /// Coefficient of q^n (integer grid). Raises if n is out of range.
    fn coeff_q(&self, n: i64) -> PyResult<Rat> {
        self.inner.coeff_q(n).map_err(value_err)
    }

    /// Leading exponent in units of 1/24.
    fn offset24(&self) -> i64 {
        self.inner.offset24()
    }

    /// Precision bound in units of 1/24.
    fn prec24(&self) -> i64 {
        self.inner.prec24()
    }

    /// Nonzero terms as (exponent24, coefficient) pairs.
    fn terms(&self) -> Vec<(i64, Rat)> {
        self.inner.terms().map(|(e, c)| (e, c.clone())).collect()
    }

    fn add(&self, other: &PySeries24) -> PySeries24 {
        PySeries24 { inner: self.inner.add(&other.inner) }
    }

    fn mul(&self, other: &PySeries24) -> PySeries24 {
        PySeries24 { inner: self.inner.mul(&other.inner) }
    }

    fn scale(&self, c: Rat) -> PySeries24 {
        PySeries24 { inner: self.inner.scale(&c) }
    }

    /// Substitute q -> q^d.
    fn dilate(&self, d: i64) -> PyResult<PySeries24> {
        Ok(PySeries24 { inner: self.inner.dilate(d) })
    }

    /// Multiply by q^(s/24).
    fn shift24(&self, s: i64) -> PySeries24 {
        PySeries24 { inner: self.inner.shift24(s) }
    }

    /// First exponent24 where the two series differ, or None.
    fn first_difference(&self, other: &PySeries24, bound24: i64) -> PyResult<Option<i64>> {
        Ok(self
            .inner
            .first_difference(&other.inner, bound24)
            .map_err(value_err)?
            .map(|(e, _, _)| e))
    }

    fn __repr__(&self) -> String {
        format!(
            "Series24(offset24={}, prec24={})",
            self.inner.offset24(),
            self.inner.prec24()
        )
    }
}

/// A mixed form: hexagonal-kernel variables, squares, and triangular
/// variables with positive integer coefficients.
#[pyclass(name = "MixedForm", skip_from_py_object)]
#[derive(Clone)]
struct PyMixedForm {
    inner: MixedForm,
}

fn classification_dict<'py>(py: Python<'py>, form: &MixedForm) -> PyResult<Bound<'py, PyDict>> {
    let cls = form.classify().map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("weight", cls.weight)?;
    d.set_item("level", cls.level)?;
    d.set_item("character_top", cls.character.top)?;
    d.set_item("character_modulus", cls.character.modulus)?;
    d.set_item("q_prefactor24", cls.q_prefactor24)?;
    d.set_item("modular", cls.modular)?;
    Ok(d)
}

#[pymethods]
impl PyMixedForm {
    #[new]
    fn new(hex: Vec<i64>, squares: Vec<i64>, tri: Vec<i64>) -> PyMixedForm {
        PyMixedForm { inner: MixedForm::mixed(&hex, &squares, &tri) }
    }

    /// Parse a descriptor such as "tri:1^2 3^2" or
    /// "st:1^1 3^1 ; 2^1 6^1" or "mixed:2^1 ; 1^3 3^3 ; ".
    #[staticmethod]
    fn parse(descriptor: &str) -> PyResult<PyMixedForm> {
        let (_, form) = parse_form(descriptor).map_err(value_err)?;
        Ok(PyMixedForm { inner: form })
    }

    /// Number of representations of n.
    fn count(&self, n: i64) -> u64 {
        self.inner.count(n)
    }

    /// Representation counts for 0..=n_max.
    fn count_profile(&self, n_max: i64) -> Vec<u64> {
        self.inner.count_profile(n_max)
    }

    /// Generating function as an exact series.
    fn gen_series(&self, prec24: i64) -> PySeries24 {
        PySeries24 { inner: self.inner.gen_series(prec24) }
    }

    /// Sum of the triangular coefficients.
    fn h(&self) -> i64 {
        self.inner.h()
    }

    /// Weight, level, character and modularity of q^(h/8) times the
    /// generating function.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        classification_dict(py, &self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "MixedForm(hex={:?}, squares={:?}, tri={:?})",
            self.inner.hex, self.inner.squares, self.inner.tri
        )
    }
}

/// An eta quotient prod eta(delta tau)^{r_delta} at a declared level.
#[pyclass(name = "EtaQuotient", skip_from_py_object)]
#[derive(Clone)]
struct PyEtaQuotient {
    inner: EtaQuotient,
}

#[pymethods]
impl PyEtaQuotient {
    /// Parse a quotient such as "2^2 1^-1"; the level defaults to the lcm
    /// of the deltas unless given.
    #[staticmethod]
    #[pyo3(signature = (text, level=None))]
    fn parse(text: &str, level: Option<i64>) -> PyResult<PyEtaQuotient> {
        let mut e = EtaQuotient::parse(text).map_err(value_err)?;
        if let Some(n) = level {
            e = e.with_level(n).map_err(value_err)?;
        }
        Ok(PyEtaQuotient { inner: e })
    }

    /// Holomorphy criterion verdict as a dict.
    fn check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let v = self.inner.check_theorem_a();
        let d = PyDict::new(py);
        d.set_item("conditions_hold", v.conditions_hold)?;
        d.set_item("is_cusp", v.is_cusp)?;
        d.set_item("weight", v.weight)?;
        d.set_item("character_top", v.character.top)?;
        d.set_item("character_modulus", v.character.modulus)?;
        Ok(d)
    }

    fn expand(&self, prec24: i64) -> PySeries24 {
        PySeries24 { inner: self.inner.expand(prec24) }
    }

    fn dilate(&self, d: i64) -> PyEtaQuotient {
        PyEtaQuotient { inner: self.inner.dilate(d) }
    }

    fn __repr__(&self) -> String {
        format!("EtaQuotient({})", self.inner)
    }
}

/// psi(q) = sum q^{n(n+1)/2}.
#[pyfunction]
fn psi(prec24: i64) -> PySeries24 {
    PySeries24 { inner: psi_series(prec24) }
}

/// theta(q) = sum q^{n^2} over all integers.
#[pyfunction]
fn theta(prec24: i64) -> PySeries24 {
    PySeries24 { inner: theta_series(prec24) }
}

/// Coefficient-equality bound for the catalogued space of the given weight
/// and level.
#[pyfunction(name = "sturm_bound")]
fn sturm_bound_py(weight: u32, level: i64) -> i64 {
    sturm_bound(weight, level)
}

/// Display strings of every catalogued space.
#[pyfunction]
fn spaces() -> Vec<String> {
    catalogued_spaces().iter().map(|s| s.to_string()).collect()
}

/// Express q^(h/8) times the generating function of a form descriptor in
/// the table columns of its classified space. Returns a dict with the
/// space, the printed shift h/8 numerator, column labels, exact
/// coordinates, and a divisor-sum rendering of the formula.
#[pyfunction]
fn solve<'py>(py: Python<'py>, descriptor: &str) -> PyResult<Bound<'py, PyDict>> {
    let (_, form) = parse_form(descriptor).map_err(value_err)?;
    let cls = form.classify().map_err(value_err)?;
    if !cls.modular {
        return Err(value_err(format!(
            "h = {} is not divisible by 8; the prefactored series is not modular",
            form.h()
        )));
    }
    let space = triforms::basis::SpaceId::new(cls.weight as u32, cls.level, cls.character.clone());
    let bound = sturm_bound(cls.weight as u32, cls.level);
    let target = form
        .gen_series(24 * (bound + 16))
        .shift24(cls.q_prefactor24);
    let (labels, values, verified) = express_in_table_columns(&target, &space).map_err(value_err)?;
    let elements = table_columns(&space).map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("space", classification_dict(py, &form)?)?;
    d.set_item("shift", form.h() / 8)?;
    d.set_item("labels", labels)?;
    d.set_item("t", values.clone())?;
    d.set_item("verified_through", verified)?;
    d.set_item("formula", formula_for_columns(&elements, &values))?;
    Ok(d)
}

#[pymodule]
fn triforms_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySeries24>()?;
    m.add_class::<PyMixedForm>()?;
    m.add_class::<PyEtaQuotient>()?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(sturm_bound_py, m)?)?;
    m.add_function(wrap_pyfunction!(spaces, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    Ok(())
}

//! Python bindings for `bohr_lab`.

use bohr_lab::classes::{self, boundary_distance_lower, coeff_bound_sum, growth_envelope};
use bohr_lab::radii::{self, q_value};
use bohr_lab::verify::{self, FuzzOptions};
use bohr_lab::{Enclosure, Error};
use num_complex::Complex64;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(err: Error) -> PyErr {
    if err.is_solver_error() {
        PyArithmeticError::new_err(err.to_string())
    } else {
        PyValueError::new_err(err.to_string())
    }
}

fn pair(e: Enclosure) -> (f64, f64) {
    (e.lo(), e.hi())
}

/// Parameters of a harmonic class.
#[pyclass(name = "ClassParams", frozen)]
struct PyClassParams(classes::ClassParams);

#[pymethods]
impl PyClassParams {
    #[staticmethod]
    fn tilde_g0h(beta: f64) -> PyResult<Self> {
        classes::ClassParams::tilde_g0h(beta).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn w0h(alpha: f64) -> PyResult<Self> {
        classes::ClassParams::w0h(alpha).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn gkh(k: u32, alpha: f64) -> PyResult<Self> {
        classes::ClassParams::gkh(k, alpha).map(Self).map_err(to_py)
    }

    fn first_free_index(&self) -> usize {
        self.0.first_free_index()
    }

    fn __repr__(&self) -> String {
        format!("ClassParams({})", self.0)
    }
}

/// A radius equation.
#[pyclass(name = "RadiusProblem", frozen)]
struct PyRadiusProblem(radii::RadiusProblem);

#[pymethods]
impl PyRadiusProblem {
    /// Builds a problem from its tag (`t31` ... `t36`, `ta`) and parameters.
    #[new]
    #[pyo3(signature = (theorem, beta=None, alpha=None, k=None, n=None))]
    fn new(
        theorem: &str,
        beta: Option<f64>,
        alpha: Option<f64>,
        k: Option<u32>,
        n: Option<u32>,
    ) -> PyResult<Self> {
        use radii::RadiusProblem as P;
        let need = |v: Option<f64>, name: &str| {
            v.ok_or_else(|| PyValueError::new_err(format!("{theorem} needs {name}")))
        };
        let problem = match theorem {
            "t31" => P::T31 { beta: need(beta, "beta")? },
            "t32" => P::T32 { beta: need(beta, "beta")? },
            "t33" => P::T33 { alpha: need(alpha, "alpha")? },
            "t34" => P::T34 { alpha: need(alpha, "alpha")? },
            "t35" | "t36" => {
                let k = k.ok_or_else(|| PyValueError::new_err(format!("{theorem} needs k")))?;
                let alpha = need(alpha, "alpha")?;
                if theorem == "t35" {
                    P::T35 { k, alpha }
                } else {
                    P::T36 { k, alpha }
                }
            }
            "ta" => P::TA {
                n: n.ok_or_else(|| PyValueError::new_err("ta needs n"))?,
            },
            other => return Err(PyValueError::new_err(format!("unknown theorem '{other}'"))),
        };
        problem.validate().map_err(to_py)?;
        Ok(Self(problem))
    }

    #[getter]
    fn tag(&self) -> &'static str {
        self.0.tag()
    }

    fn class_params(&self) -> Option<PyClassParams> {
        self.0.class().map(PyClassParams)
    }

    fn __repr__(&self) -> String {
        format!("RadiusProblem({})", self.0)
    }
}

/// A harmonic polynomial `h + conj(g)` given by its coefficients.
#[pyclass(name = "HarmonicModel", frozen)]
struct PyHarmonicModel(classes::HarmonicModel);

#[pymethods]
impl PyHarmonicModel {
    #[staticmethod]
    fn identity() -> Self {
        Self(classes::HarmonicModel::identity())
    }

    /// Coefficients `a_2, a_3, ...` and `b_2, b_3, ...`.
    #[staticmethod]
    #[pyo3(signature = (a, b=Vec::new()))]
    fn from_tails(a: Vec<Complex64>, b: Vec<Complex64>) -> PyResult<Self> {
        classes::HarmonicModel::from_tails(&a, &b).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn extremal(class_params: &PyClassParams, truncation: usize) -> PyResult<Self> {
        classes::extremal_model(&class_params.0, truncation)
            .map(Self)
            .map_err(to_py)
    }

    #[staticmethod]
    fn majorant(class_params: &PyClassParams, truncation: usize) -> PyResult<Self> {
        classes::majorant_model(&class_params.0, truncation)
            .map(Self)
            .map_err(to_py)
    }

    #[staticmethod]
    fn sample(class_params: &PyClassParams, seed: u64, truncation: usize) -> PyResult<Self> {
        verify::sample_admissible_model(&class_params.0, seed, truncation)
            .map(Self)
            .map_err(to_py)
    }

    #[getter]
    fn truncation(&self) -> usize {
        self.0.truncation()
    }

    fn a(&self, n: usize) -> Complex64 {
        self.0.a(n)
    }

    fn b(&self, n: usize) -> Complex64 {
        self.0.b(n)
    }

    fn __call__(&self, z: Complex64) -> Complex64 {
        self.0.eval(z)
    }

    fn __repr__(&self) -> String {
        format!("HarmonicModel(truncation={})", self.0.truncation())
    }
}

/// Certified root of the radius equation as a dict with keys `r`,
/// `half_width`, `q_lo`, `q_hi` and `iterations`.
#[pyfunction]
#[pyo3(signature = (problem, tol=1e-10))]
fn solve_radius<'py>(
    py: Python<'py>,
    problem: &PyRadiusProblem,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let root = radii::solve_radius(&problem.0, tol).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("r", root.r)?;
    d.set_item("half_width", root.half_width)?;
    d.set_item("q_lo", pair(root.q_lo))?;
    d.set_item("q_hi", pair(root.q_hi))?;
    d.set_item("iterations", root.iterations)?;
    Ok(d)
}

#[pyfunction]
fn solve_q1_closed_form(beta: f64) -> PyResult<f64> {
    radii::solve_q1_closed_form(beta).map_err(to_py)
}

/// Enclosure `(lo, hi)` of the radius function at `r`.
#[pyfunction]
#[pyo3(signature = (problem, r, eps=1e-12))]
fn radius_function(problem: &PyRadiusProblem, r: f64, eps: f64) -> PyResult<(f64, f64)> {
    q_value(&problem.0, r, eps).map(pair).map_err(to_py)
}

#[pyfunction(name = "coeff_bound_sum")]
fn py_coeff_bound_sum(class_params: &PyClassParams, n: usize) -> PyResult<f64> {
    coeff_bound_sum(&class_params.0, n).map_err(to_py)
}

/// `((lower_lo, lower_hi), (upper_lo, upper_hi))`.
#[pyfunction(name = "growth_envelope")]
#[pyo3(signature = (class_params, r, eps=1e-12))]
fn py_growth_envelope(
    class_params: &PyClassParams,
    r: f64,
    eps: f64,
) -> PyResult<((f64, f64), (f64, f64))> {
    let (lower, upper) = growth_envelope(&class_params.0, r, eps).map_err(to_py)?;
    Ok((pair(lower), pair(upper)))
}

#[pyfunction(name = "boundary_distance_lower")]
#[pyo3(signature = (class_params, eps=1e-12))]
fn py_boundary_distance_lower(class_params: &PyClassParams, eps: f64) -> PyResult<(f64, f64)> {
    boundary_distance_lower(&class_params.0, eps)
        .map(pair)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (model, r, from_index=2))]
fn bohr_sum(model: &PyHarmonicModel, r: f64, from_index: usize) -> PyResult<f64> {
    verify::bohr_sum(&model.0, r, from_index).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (model, r, grid=720))]
fn modulus_sup(model: &PyHarmonicModel, r: f64, grid: usize) -> f64 {
    verify::modulus_sup(&model.0, r, grid)
}

#[pyfunction]
fn area_ratio(model: &PyHarmonicModel, r: f64) -> PyResult<f64> {
    verify::area_ratio(&model.0, r).map_err(to_py)
}

fn verdict_dict<'py>(py: Python<'py>, v: &verify::Verdict) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("status", v.status.to_string())?;
    d.set_item("margin", v.margin)?;
    d.set_item("at_r", v.at_r)?;
    d.set_item("details", &v.details)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (model, class_params, theorem, r, tol=1e-9))]
fn check_theorem<'py>(
    py: Python<'py>,
    model: &PyHarmonicModel,
    class_params: &PyClassParams,
    theorem: &PyRadiusProblem,
    r: f64,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let v = verify::check_theorem(&model.0, &class_params.0, &theorem.0, r, tol).map_err(to_py)?;
    verdict_dict(py, &v)
}

#[pyfunction]
#[pyo3(signature = (model, class_params, radii, angular=64))]
fn membership_spot_check<'py>(
    py: Python<'py>,
    model: &PyHarmonicModel,
    class_params: &PyClassParams,
    radii: Vec<f64>,
    angular: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let v = verify::membership_spot_check(&model.0, &class_params.0, &radii, angular)
        .map_err(to_py)?;
    verdict_dict(py, &v)
}

#[pyfunction]
#[pyo3(signature = (theorem, tol=1e-6))]
fn sharpness_gap(theorem: &PyRadiusProblem, tol: f64) -> PyResult<f64> {
    verify::sharpness_gap(&theorem.0, tol).map_err(to_py)
}

/// Functional of the bounded analytic theorem for coefficients
/// `a_0, a_1, ...`.
#[pyfunction]
fn theorem_b_functional(coeffs: Vec<Complex64>, r: f64) -> PyResult<f64> {
    verify::theorem_b_functional(&coeffs, r).map_err(to_py)
}

/// Runs a fuzz campaign and returns its summary as a dict.
#[pyfunction]
#[pyo3(signature = (theorem, samples=1000, seed=0, truncation=2000, tol=1e-9))]
fn fuzz<'py>(
    py: Python<'py>,
    theorem: &PyRadiusProblem,
    samples: usize,
    seed: u64,
    truncation: usize,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let options = FuzzOptions {
        samples,
        seed,
        truncation,
        tol,
        membership_filter: false,
    };
    let s = py
        .detach(|| verify::fuzz_theorem(&theorem.0, &options))
        .map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("radius", s.radius)?;
    d.set_item("r_check", s.r_check)?;
    d.set_item("samples", s.samples)?;
    d.set_item("holds", s.holds)?;
    d.set_item("fails", s.fails)?;
    d.set_item("inconclusive", s.inconclusive)?;
    d.set_item("dominance_violations", s.dominance_violations)?;
    d.set_item("worst_margin", s.worst_margin)?;
    d.set_item("worst_seed", s.worst_seed)?;
    Ok(d)
}

#[pymodule]
#[pyo3(name = "bohr_lab")]
fn bohr_lab_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyClassParams>()?;
    m.add_class::<PyRadiusProblem>()?;
    m.add_class::<PyHarmonicModel>()?;
    m.add_function(wrap_pyfunction!(solve_radius, m)?)?;
    m.add_function(wrap_pyfunction!(solve_q1_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(radius_function, m)?)?;
    m.add_function(wrap_pyfunction!(py_coeff_bound_sum, m)?)?;
    m.add_function(wrap_pyfunction!(py_growth_envelope, m)?)?;
    m.add_function(wrap_pyfunction!(py_boundary_distance_lower, m)?)?;
    m.add_function(wrap_pyfunction!(bohr_sum, m)?)?;
    m.add_function(wrap_pyfunction!(modulus_sup, m)?)?;
    m.add_function(wrap_pyfunction!(area_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(check_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(membership_spot_check, m)?)?;
    m.add_function(wrap_pyfunction!(sharpness_gap, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_b_functional, m)?)?;
    m.add_function(wrap_pyfunction!(fuzz, m)?)?;
    Ok(())
}

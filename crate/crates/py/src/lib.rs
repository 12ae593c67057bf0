//! Python module `mathieu`: certified enclosures of Mathieu's series, the
//! nested bounds, the α expansion and the lemma reports.
//!
//! Rationals cross the boundary as text (`"257/100"`, `"2.57"`, `"1e-9"`)
//! or as anything whose `str()` parses that way, such as `int` and
//! `fractions.Fraction`. Endpoints come back as exact `"p/q"` strings.

use mathieu_core::asymptotics::{alpha_coefficients as core_alpha_coefficients, required_k};
use mathieu_core::eval::{self, Method, MethodConfig};
use mathieu_core::exact::{parse_rational, to_decimal, Rounding};
use mathieu_core::verify::{self as core_verify, BestConstants as CoreBestConstants};
use mathieu_core::{Error, Rational, RationalInterval};
use pyo3::exceptions::{PyArithmeticError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::PrecisionExhausted(_)
        | Error::PrecisionInsufficient(_)
        | Error::InsufficientOrder { .. } => PyArithmeticError::new_err(e.to_string()),
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text = obj.str()?.to_string();
    parse_rational(&text).map_err(to_py_err)
}

/// A closed interval with exact rational endpoints.
#[pyclass(frozen, skip_from_py_object, module = "mathieu")]
#[derive(Clone)]
pub struct Interval {
    inner: RationalInterval,
}

#[pymethods]
impl Interval {
    #[new]
    fn new(lo: &Bound<'_, PyAny>, hi: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = RationalInterval::new(rational(lo)?, rational(hi)?).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn lo(&self) -> String {
        self.inner.lo().to_string()
    }

    #[getter]
    fn hi(&self) -> String {
        self.inner.hi().to_string()
    }

    #[getter]
    fn width(&self) -> String {
        self.inner.width().to_string()
    }

    fn contains(&self, x: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(self.inner.contains(&rational(x)?))
    }

    fn intersects(&self, other: &Interval) -> bool {
        self.inner.intersects(&other.inner)
    }

    /// `(lo, hi)` rendered with `digits` fractional digits, rounded outward.
    #[pyo3(signature = (digits = 20))]
    fn decimal(&self, digits: usize) -> (String, String) {
        (
            to_decimal(self.inner.lo(), digits, Rounding::Floor),
            to_decimal(self.inner.hi(), digits, Rounding::Ceil),
        )
    }

    fn __repr__(&self) -> String {
        format!("Interval({}, {})", self.inner.lo(), self.inner.hi())
    }

    fn __eq__(&self, other: &Interval) -> bool {
        self.inner == other.inner
    }
}

/// An enclosure together with the method and truncation that produced it.
#[pyclass(frozen, module = "mathieu")]
pub struct CertifiedValue {
    #[pyo3(get)]
    enclosure: Interval,
    #[pyo3(get)]
    method: String,
    #[pyo3(get)]
    terms_used: u64,
    #[pyo3(get)]
    r: String,
}

#[pymethods]
impl CertifiedValue {
    fn __repr__(&self) -> String {
        format!(
            "CertifiedValue(r={}, method={}, terms_used={}, enclosure={})",
            self.r,
            self.method,
            self.terms_used,
            self.enclosure.__repr__()
        )
    }
}

impl From<eval::CertifiedValue> for CertifiedValue {
    fn from(v: eval::CertifiedValue) -> Self {
        Self {
            enclosure: Interval { inner: v.enclosure },
            method: v.method.name().to_string(),
            terms_used: v.terms_used,
            r: v.r.to_string(),
        }
    }
}

const DEFAULT_WIDTH: &str = "1e-20";

fn config(
    method: &str,
    width: Option<&Bound<'_, PyAny>>,
    order: Option<u64>,
) -> PyResult<MethodConfig> {
    let method = Method::parse(method)
        .ok_or_else(|| PyValueError::new_err(format!("unknown method {method:?}")))?;
    let width = match width {
        Some(w) => rational(w)?,
        None => parse_rational(DEFAULT_WIDTH).map_err(to_py_err)?,
    };
    MethodConfig::new(method, order, width).map_err(to_py_err)
}

type Evaluator = fn(&Rational, &MethodConfig) -> mathieu_core::Result<eval::CertifiedValue>;

fn run(
    f: Evaluator,
    r: &Bound<'_, PyAny>,
    method: &str,
    width: Option<&Bound<'_, PyAny>>,
    order: Option<u64>,
) -> PyResult<CertifiedValue> {
    let cfg = config(method, width, order)?;
    let r = rational(r)?;
    f(&r, &cfg).map(Into::into).map_err(to_py_err)
}

/// Certified enclosure of `S(r) = Σ 2n/(n²+r²)²`.
#[pyfunction]
#[pyo3(signature = (r, method = "combined", width = None, order = None))]
fn eval_s(
    r: &Bound<'_, PyAny>,
    method: &str,
    width: Option<&Bound<'_, PyAny>>,
    order: Option<u64>,
) -> PyResult<CertifiedValue> {
    run(eval::eval_s, r, method, width, order)
}

/// Certified enclosure of `Σ 2n/(n²+r²)³`.
#[pyfunction]
#[pyo3(signature = (r, method = "combined", width = None, order = None))]
fn companion_cube_sum(
    r: &Bound<'_, PyAny>,
    method: &str,
    width: Option<&Bound<'_, PyAny>>,
    order: Option<u64>,
) -> PyResult<CertifiedValue> {
    run(eval::companion_cube_sum, r, method, width, order)
}

/// Certified enclosure of α(r).
#[pyfunction]
#[pyo3(signature = (r, method = "combined", width = None, order = None))]
fn alpha(
    r: &Bound<'_, PyAny>,
    method: &str,
    width: Option<&Bound<'_, PyAny>>,
    order: Option<u64>,
) -> PyResult<CertifiedValue> {
    run(eval::alpha, r, method, width, order)
}

/// Certified enclosure of T(r).
#[pyfunction]
#[pyo3(signature = (r, method = "combined", width = None, order = None))]
fn t_function(
    r: &Bound<'_, PyAny>,
    method: &str,
    width: Option<&Bound<'_, PyAny>>,
    order: Option<u64>,
) -> PyResult<CertifiedValue> {
    run(eval::t_function, r, method, width, order)
}

/// `1/(r² + 1/2 − (4r²+1)/(12(r²+c)))` over every constant in `c`.
#[pyfunction]
fn hoorfar_qi_bound(r: &Bound<'_, PyAny>, c: &Interval) -> PyResult<Interval> {
    eval::hoorfar_qi_bound(&rational(r)?, &c.inner)
        .map(|inner| Interval { inner })
        .map_err(to_py_err)
}

/// Enclosures of the two extremal constants.
#[pyclass(frozen, module = "mathieu")]
pub struct BestConstants {
    #[pyo3(get)]
    a_star: Interval,
    #[pyo3(get)]
    b_star: String,
}

#[pymethods]
impl BestConstants {
    #[new]
    #[pyo3(signature = (zeta_width = "1e-20"))]
    fn new(zeta_width: &str) -> PyResult<Self> {
        let w = parse_rational(zeta_width).map_err(to_py_err)?;
        let bc = CoreBestConstants::compute(&w).map_err(to_py_err)?;
        Ok(Self {
            a_star: Interval { inner: bc.a_star },
            b_star: bc.b_star.to_string(),
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "BestConstants(a_star={}, b_star={})",
            self.a_star.__repr__(),
            self.b_star
        )
    }
}

/// First `n` coefficients of α(r) in powers of `1/r²`, as `"p/q"` strings.
#[pyfunction]
fn alpha_coefficients(n: usize) -> PyResult<Vec<String>> {
    if n == 0 {
        return Err(PyValueError::new_err("need at least one coefficient"));
    }
    let cs = core_alpha_coefficients(n).map_err(to_py_err)?;
    Ok(cs.iter().map(ToString::to_string).collect())
}

/// Order of the S expansion used for `n` α coefficients.
#[pyfunction]
fn series_order_for(n: usize) -> usize {
    required_k(n)
}

#[pyclass(frozen, skip_from_py_object, module = "mathieu")]
#[derive(Clone)]
pub struct Check {
    #[pyo3(get)]
    name: String,
    #[pyo3(get)]
    status: String,
    #[pyo3(get)]
    kind: String,
    #[pyo3(get)]
    witness: Option<String>,
    #[pyo3(get)]
    detail: String,
}

#[pymethods]
impl Check {
    fn __repr__(&self) -> String {
        format!("Check({}: {})", self.name, self.status)
    }
}

/// Outcome of a lemma or theorem verification.
#[pyclass(frozen, module = "mathieu")]
pub struct Report {
    #[pyo3(get)]
    target: String,
    #[pyo3(get)]
    overall: String,
    checks: Vec<Check>,
}

#[pymethods]
impl Report {
    #[getter]
    fn checks(&self) -> Vec<Check> {
        self.checks.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "Report({}: {}, {} checks)",
            self.target,
            self.overall,
            self.checks.len()
        )
    }
}

/// Runs one of `lemma1`, `lemma2`, `lemma3`, `theorem`, `all`.
#[pyfunction]
#[pyo3(signature = (target, zeta_width = "1e-20", eval_width = "1e-20"))]
fn verify(py: Python<'_>, target: &str, zeta_width: &str, eval_width: &str) -> PyResult<Report> {
    let cfg = core_verify::VerifyConfig {
        zeta_width: parse_rational(zeta_width).map_err(to_py_err)?,
        eval_width: parse_rational(eval_width).map_err(to_py_err)?,
        ..core_verify::VerifyConfig::default()
    };
    let run: fn(&core_verify::VerifyConfig) -> core_verify::LemmaReport = match target {
        "lemma1" => core_verify::verify_lemma1,
        "lemma2" => core_verify::verify_lemma2,
        "lemma3" => core_verify::verify_lemma3,
        "theorem" => |cfg| core_verify::verify_theorem(&core_verify::default_theorem_grid(), cfg),
        "all" => core_verify::verify_all,
        other => return Err(PyValueError::new_err(format!("unknown target {other:?}"))),
    };
    let report = py.detach(|| run(&cfg));
    Ok(Report {
        target: report.target.clone(),
        overall: report.overall().as_str().to_string(),
        checks: report
            .checks
            .into_iter()
            .map(|c| Check {
                status: c.status.as_str().to_string(),
                kind: c.kind.as_str().to_string(),
                name: c.name,
                witness: c.witness,
                detail: c.detail,
            })
            .collect(),
    })
}

#[pymodule]
pub fn mathieu(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Interval>()?;
    m.add_class::<CertifiedValue>()?;
    m.add_class::<BestConstants>()?;
    m.add_class::<Check>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(eval_s, m)?)?;
    m.add_function(wrap_pyfunction!(companion_cube_sum, m)?)?;
    m.add_function(wrap_pyfunction!(alpha, m)?)?;
    m.add_function(wrap_pyfunction!(t_function, m)?)?;
    m.add_function(wrap_pyfunction!(hoorfar_qi_bound, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(series_order_for, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

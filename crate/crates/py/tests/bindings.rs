use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(mathieu::mathieu)(py);
        let globals = PyDict::new(py);
        globals.set_item("mathieu", module).unwrap();
        let code = std::ffi::CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn evaluates_and_brackets() {
    with_module(
        r#"
from fractions import Fraction
v = mathieu.eval_s("257/100", width="1e-24")
lo, hi = Fraction(v.enclosure.lo), Fraction(v.enclosure.hi)
assert hi - lo <= Fraction(1, 10**24)
a = mathieu.alpha(Fraction(257, 100), width="1e-10")
for end in (a.enclosure.lo, a.enclosure.hi):
    assert int(Fraction(end) * 10**10) == 4709258826
bc = mathieu.BestConstants()
lower = mathieu.hoorfar_qi_bound("2.57", bc.a_star)
upper = mathieu.hoorfar_qi_bound("2.57", mathieu.Interval("13/30", "13/30"))
assert Fraction(lower.hi) < lo and hi < Fraction(upper.lo)
"#,
    );
}

#[test]
fn coefficients_and_errors() {
    with_module(
        r#"
assert mathieu.alpha_coefficients(1) == ["13/30"]
assert len(mathieu.alpha_coefficients(6)) == 6
for call in (lambda: mathieu.eval_s(0), lambda: mathieu.eval_s(1, method="nope"),
             lambda: mathieu.alpha_coefficients(0), lambda: mathieu.Interval(2, 1)):
    try:
        call()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
try:
    mathieu.companion_cube_sum(1, method="russell")
except ValueError:
    pass
"#,
    );
}

#[test]
fn report_shape() {
    with_module(
        r#"
r = mathieu.verify("lemma2", zeta_width="1e-2")
assert r.target == "lemma2"
assert r.overall == "INCONCLUSIVE"
names = [c.name for c in r.checks]
assert "q-certificate" in names
assert all(c.kind in ("proved", "spot") for c in r.checks)
"#,
    );
}

"""Smoke test for the `mathieu` extension module.

Build and run from the repository root:

    cargo build -p mathieu-py --release
    cp target/release/libmathieu.so python/mathieu.so
    python3 python/smoke_test.py
"""

import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import mathieu  # noqa: E402


def interval_fractions(iv):
    return Fraction(iv.lo), Fraction(iv.hi)


def main():
    s1 = mathieu.eval_s("1")
    lo, hi = interval_fractions(s1.enclosure)
    assert lo <= Fraction("0.794233542759318865585") <= hi, s1
    assert hi - lo <= Fraction(1, 10**20)
    print("S(1) =", s1.enclosure.decimal(22), "via", s1.method)

    direct = mathieu.eval_s(Fraction(1), method="direct", width="1e-9")
    assert direct.method == "direct"
    assert direct.enclosure.intersects(s1.enclosure)

    a = mathieu.alpha("2.57", width="1e-10")
    assert a.enclosure.decimal(10)[0].startswith("0.4709258826"), a
    print("alpha(2.57) =", a.enclosure.decimal(12))

    t = mathieu.t_function(3)
    assert Fraction(t.enclosure.lo) > 0
    c = mathieu.companion_cube_sum("0.2", method="zeta")
    assert Fraction(c.enclosure.lo) > 0

    bc = mathieu.BestConstants()
    assert bc.b_star == "13/30"
    assert bc.a_star.decimal(10)[0] == "0.9915168156"
    upper = mathieu.hoorfar_qi_bound(2, mathieu.Interval("13/30", "13/30"))
    lower = mathieu.hoorfar_qi_bound(2, bc.a_star)
    s2 = mathieu.eval_s(2).enclosure
    assert Fraction(lower.hi) < Fraction(s2.lo) and Fraction(s2.hi) < Fraction(upper.lo)
    print("nested bracket at r = 2 holds")

    coeffs = mathieu.alpha_coefficients(4)
    assert coeffs == ["13/30", "104/525", "592/2625", "404032/1010625"], coeffs
    print("alpha coefficients:", coeffs)

    report = mathieu.verify("lemma1")
    assert report.overall == "VERIFIED", [(c.name, c.status) for c in report.checks]
    print(report, [c.name for c in report.checks])

    for bad in (lambda: mathieu.eval_s("-1"), lambda: mathieu.verify("bogus")):
        try:
            bad()
        except ValueError as e:
            print("rejected:", e)
        else:
            raise AssertionError("expected ValueError")

    print("smoke test passed")


if __name__ == "__main__":
    main()

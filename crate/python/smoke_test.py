"""Smoke test for the einsu_py extension.

    pip install --no-build-isolation -e crates/python
    python python/smoke_test.py
"""

from fractions import Fraction

import einsu_py as e


def main():
    prm = e.SystemParams(3, 2, 3)
    assert prm.n == 7

    f3 = [Fraction(c) for c in e.f3_coeffs(3, 2, 3)]
    assert len(f3) == 17
    assert f3[0] == 1443420 and f3[16] == 31036096

    g3 = [Fraction(c) for c in e.g3_coeffs(2, 3)]
    assert g3[0] == -12096

    r = e.ricci_components(3, 2, 3, 1, 1, 1, 1, 1)
    assert all(abs(v - 0.25) < 1e-12 for v in r), r

    res = e.solve(3, 2, 3)
    assert res.theorem_met and res.residuals_ok
    x = res.case2_x12()
    assert len(x) == 2
    assert abs(x[0] - 0.746092801872769) < 1e-12
    assert abs(x[1] - 1.44457132938799) < 1e-12
    recs = [r for r in res.records() if r["case"] == "Case2"]
    assert all(r["classification"] == "NonNaturallyReductive" for r in recs)
    assert res.to_dict()["schema"] == e.SCHEMA

    res = e.solve(2, 2, 3)
    classes = {r["classification"] for r in res.records() if r["case"] == "Case2"}
    assert classes == {"NaturallyReductive(i)", "NonNaturallyReductive"}, classes

    exact, dec = e.einstein_constant(3, 2, 3, "1")
    assert Fraction(exact) > 0 and dec.startswith(str(float(Fraction(exact)))[:6])

    rep = e.verify([2, 2, 2], trials=5)
    assert rep["passed"], rep

    certs = e.certify(48, 2, 3)
    assert certs["remark1"]["passed"] and certs["monotonicity"]["holds_on_whole_range"]

    try:
        e.solve(2, 2, 2)
    except ValueError:
        pass
    else:
        raise AssertionError("p = 2 accepted")

    print("smoke test OK")


if __name__ == "__main__":
    main()

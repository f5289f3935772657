use einsu_py::einsu_py;
use pyo3::prelude::*;

#[test]
fn module_runs_in_an_embedded_interpreter() {
    pyo3::append_to_inittab!(einsu_py);
    Python::initialize();
    Python::attach(|py| {
        py.run(
            cr#"
import einsu_py as e
from fractions import Fraction
assert Fraction(e.f3_coeffs(3, 2, 3)[0]) == 1443420
res = e.solve(3, 2, 3, oracle=False)
assert res.theorem_met and len(res.case2_x12()) == 2
assert res.params.n == 7
r = e.ricci_components(2, 2, 3, 1, 1, 1, 1, 1)
assert all(abs(v - 0.25) < 1e-12 for v in r)
try:
    e.SystemParams(2, 2, 2)
    raise AssertionError("accepted p = 2")
except ValueError:
    pass
"#,
            None,
            None,
        )
        .unwrap();
    });
}

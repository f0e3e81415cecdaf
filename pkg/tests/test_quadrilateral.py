import random
from fractions import Fraction
from pathlib import Path

import pytest
import sympy

from extwins.data import __file__ as data_init
from extwins.exactnum import Poly, RationalFunction, as_rational_function
from extwins.quadrilateral import (CalabiAnsatz, InfeasibleAnsatz, Labels, NonPositivePotential,
                                   affine_in_moments, ansatz_from_text, boundary_residuals,
                                   calabi_fit, calabi_from_A, calabi_lattice_ell,
                                   cscs_family_labels, cscs_twin_family, find_twin,
                                   lattice_labels, lebrun_ansatz, load_ansatz, metric_data,
                                   ortho_fit, orthotoric_from_A, orthotoric_g, product_fit,
                                   product_from_AB, product_lebrun, weighted_scal)
from extwins.textformat import ParseError
from extwins.verify import (kahler_einstein_calabi, kahler_einstein_orthotoric,
                            random_boundary_params)
from conftest import to_sympy

DATA = Path(data_init).parent
x, y = Poly.var("x"), Poly.var("y")
Xs, Ys = sympy.symbols("x y")


def rand_frac(rng, lo, hi):
    return Fraction(lo) + Fraction(rng.randint(1, 99), 100) * (Fraction(hi) - Fraction(lo))


def random_cscs_family(rng):
    a1 = rand_frac(rng, 0, 3)
    a2 = a1 + rand_frac(rng, 0, 3)
    return a1, a2, rand_frac(rng, Fraction(1, 2), 3)


def test_calabi_fit_cscs_family_closed_form():
    rng = random.Random(61)
    for _ in range(5):
        a1, a2, C = random_cscs_family(rng)
        ans = calabi_fit((a1, a2, 0, 1), cscs_family_labels(a1, a2, C))
        k = a1**2 * (a2 - a1) * C
        A = 2 * (Xs - a1) * (a2 - Xs) * ((a1 + a2) * Xs - a1 * a2) / k
        B = 2 * (a1**2 + 3 * a1 * a2 + a2**2) * Ys * (1 - Ys) / k
        assert sympy.expand(to_sympy(ans.A) - A) == 0
        assert sympy.expand(to_sympy(ans.B) - B) == 0
        assert all(r == 0 for r in ans.boundary_residuals())


def test_calabi_fit_needs_symmetric_beta_labels():
    with pytest.raises(ValueError):
        calabi_fit((1, 2, 0, 1), (1, Fraction(-1, 4), Fraction(-1, 11), Fraction(1, 7)))


def test_ortho_fit_round_trip():
    rng = random.Random(5)
    done = 0
    while done < 5:
        params = random_boundary_params(rng, "orthotoric")
        a1, a2 = params[:2]
        A = (x - a1) * (a2 - x) * (rand_frac(rng, -2, 2) * x**2 + rand_frac(rng, -2, 2) * x + 1)
        try:
            ref = orthotoric_from_A(params, A)
            fit = ortho_fit(params, ref.labels)
        except ValueError:
            continue  # label signs outside the admissible pattern
        assert fit is not None
        assert fit.A == ref.A and fit.B == ref.B
        assert fit.coupling_ok()
        assert all(r == 0 for r in fit.boundary_residuals())
        bad = Labels(ref.labels.alpha1, ref.labels.alpha2, ref.labels.beta1, ref.labels.beta2 * 3)
        assert ortho_fit(params, bad) is None
        done += 1


def test_product_fit_symmetric():
    alpha = Fraction(3, 2)
    ans = product_fit((-alpha, alpha, -1, 1), (1, -1, -1, 1))
    assert ans.A == (alpha**2 - x**2) / alpha
    assert ans.free_A == () and ans.free_B == ()
    quartic = product_fit((-alpha, alpha, -1, 1), (1, -1, -1, 1), degree_cap=4)
    assert len(quartic.free_A) == 1 and len(quartic.free_B) == 1


def test_lebrun_quartic_boundary():
    alpha, beta, c = Fraction(1), Fraction(2), Fraction(1, 3)
    ans = lebrun_ansatz(alpha, beta, c)
    B = as_rational_function(ans.B)
    dB = B.diff("y")
    assert B.subs({"y": beta}) == 0 and B.subs({"y": -beta}) == 0
    assert dB.subs({"y": beta}) == -2 and dB.subs({"y": -beta}) == 2


def _sympy_scal_from_H(kind, A, B):
    """General toric formula in moment coordinates, pulled back by the chain rule."""
    if kind == "calabi":
        mu = (Xs, Xs * Ys)
        H = sympy.Matrix([[A / Xs, A * Ys / Xs], [A * Ys / Xs, (B * Xs**2 + A * Ys**2) / Xs]])
    else:
        mu = (Xs + Ys, Xs * Ys)
        H = sympy.Matrix([[(A + B) / (Xs - Ys), (A * Ys + B * Xs) / (Xs - Ys)],
                          [(A * Ys + B * Xs) / (Xs - Ys), (A * Ys**2 + B * Xs**2) / (Xs - Ys)]])
    Jac = sympy.Matrix([[sympy.diff(m, v) for v in (Xs, Ys)] for m in mu])
    Jinv = Jac.inv().T  # d/dmu_i = sum_k (dx_k/dmu_i) d/dx_k

    def d(i, g):
        return Jinv[i, 0] * sympy.diff(g, Xs) + Jinv[i, 1] * sympy.diff(g, Ys)

    return -sum(d(i, d(j, H[i, j])) for i in range(2) for j in range(2))


def test_calabi_scal_closed_form_and_H():
    ans = calabi_fit((1, 2, 0, 1), cscs_family_labels(1, 2, 1))
    data = metric_data(ans)
    A0, A1 = ans.a[0], ans.a[1]
    assert data.scal == as_rational_function(-12 * A0 * x - 6 * A1)
    assert sympy.simplify(_sympy_scal_from_H("calabi", to_sympy(ans.A), to_sympy(ans.B))
                          - to_sympy(data.scal)) == 0
    assert (data.scal_from_H() - data.scal).is_zero()


def test_orthotoric_scal_closed_form_and_H():
    params = (Fraction(2), Fraction(4), Fraction(-1), Fraction(1))
    ans = orthotoric_from_A(params, (x - 2) * (4 - x) * (x + 3))
    data = metric_data(ans)
    A0, A1 = ans.a[0], ans.a[1]
    assert (data.scal - as_rational_function(-12 * A0 * (x + y) - 6 * A1)).is_zero()
    assert sympy.simplify(_sympy_scal_from_H("orthotoric", to_sympy(ans.A), to_sympy(ans.B))
                          - to_sympy(data.scal)) == 0


def test_product_scal_closed_form():
    A = (4 - x**2) / 2 + Fraction(1, 5) * (x**2 - 4) * (x - 1)
    B = 1 - y**2
    ans = product_from_AB((-2, 2, -1, 1), A, B)
    data = metric_data(ans)
    a, b = ans.a, ans.b
    assert data.scal == as_rational_function(-6 * (a[0] * x + b[0] * y) - 2 * (a[1] + b[1]))


def test_weighted_scal_constant_potential():
    ans = calabi_fit((1, 2, 0, 1), cscs_family_labels(1, 2, 1))
    data = metric_data(ans)
    assert weighted_scal(data, (1, 0, 0)) == data.scal


def test_weighted_scal_cscs_family():
    rng = random.Random(3)
    for _ in range(4):
        a1, a2, C = random_cscs_family(rng)
        fam = cscs_twin_family(a1, a2, C)
        data = metric_data(fam.ansatz)
        c1 = (a1 + a2) / (a1 * a2)
        w = weighted_scal(data, (-1, c1, 0))
        expected = 12 * (a1 + a2) * (-a1 * a2 + (a1 + a2) * x) / (a1**3 * a2 * (a2 - a1) * C)
        assert w == as_rational_function(expected)
        scal = 12 * (a1 + a2) / (a1**2 * (a2 - a1) * C)
        assert fam.scal == scal
        assert w == as_rational_function(scal * (-1 + c1 * x))


def test_weighted_scal_rejects_nonpositive():
    data = metric_data(calabi_fit((1, 2, 0, 1), cscs_family_labels(1, 2, 1)))
    with pytest.raises(NonPositivePotential):
        weighted_scal(data, (-1, 0, 0))


def test_affine_in_moments_constant():
    data = metric_data(calabi_fit((1, 2, 0, 1), cscs_family_labels(1, 2, 1)))
    fit = affine_in_moments(as_rational_function(Poly.const(7)), data)
    assert fit.is_affine and fit.coefficients == (7, 0, 0)


def test_calabi_y_squared_obstruction():
    ans = calabi_fit((1, 2, 0, 1), cscs_family_labels(1, 2, 1))
    data = metric_data(ans)
    A3, A4 = ans.a[3], ans.a[4]
    for coeffs in ((5, Fraction(1, 3), Fraction(2, 7)), (3, 1, 1)):
        c2 = coeffs[2]
        w = weighted_scal(data, coeffs)
        assert not affine_in_moments(w, data).is_affine
        assert w.coefficient("y", 2).simplify() == RationalFunction(c2**2 * (-6 * A3 * x - 12 * A4), x)


def test_orthotoric_g_diagonal():
    params = (Fraction(2), Fraction(4), Fraction(-1), Fraction(1))
    ans = orthotoric_from_A(params, (x - 2) * (4 - x) * (x + 3))
    A3, A4 = ans.a[3], ans.a[4]
    B3, B4 = ans.b[3], ans.b[4]
    lam, c1 = Fraction(2), Fraction(1, 3)
    g = orthotoric_g(ans, (lam, c1, 0))
    diag = g.subs({"y": x})
    assert diag == Poly.lift(6 * c1 * (lam * (A3 + B3) - 2 * c1 * (A4 + B4)))
    assert ((x - y).divides(g)) == (diag == 0)


def test_find_twin_cscs_family():
    fam = cscs_twin_family(1, 2, 1)
    cert = find_twin(fam.ansatz)
    assert cert is not None
    assert cert.proportional_to((-1, Fraction(3, 2), 0))
    assert fam.both_cscs and fam.closed_forms and fam.scal == 36


def test_find_twin_none_cases():
    params = (Fraction(1), Fraction(3), Fraction(0), Fraction(1))
    assert find_twin(kahler_einstein_calabi(params)) is None
    csc = load_ansatz(DATA / "product_csc.txt")
    assert csc.is_csc() and find_twin(csc) is None
    ke = kahler_einstein_orthotoric((Fraction(2), Fraction(4), Fraction(-1), Fraction(1)))
    if ke is not None:
        assert find_twin(ke) is None


def test_cscs_family_scaling_in_C():
    base = cscs_twin_family(1, 2, 1)
    scaled = cscs_twin_family(1, 2, 3)
    assert scaled.scal == base.scal / 3
    assert scaled.potential == base.potential


@pytest.mark.parametrize("alpha, k", [(2, (-2, 11)), (3, (-3, 19))])
def test_lattice_labels(alpha, k):
    labels = lattice_labels(alpha)
    assert labels[2:] == k or labels[2:] == tuple(-v for v in k)
    ells = calabi_lattice_ell(alpha)
    assert sum(ki * li for ki, li in zip(labels, ells)) == 0


def test_lattice_labels_rejects_small_alpha():
    assert lattice_labels(Fraction(1, 2)) is None


def test_product_lebrun():
    res = product_lebrun(1, 2, Fraction(1, 3))
    assert res.matches_closed_form and res.symmetric_in_c
    assert res.cscs_c is None
    assert product_lebrun(1, 5, 0).cscs_c is None
    res6 = product_lebrun(1, 6, 0)
    assert res6.cscs_c is not None
    for c in res6.cscs_c:
        assert abs(float(c) ** 2 - 1369 / 180) < 1e-12


def test_io_loads_data_files():
    ans = load_ansatz(DATA / "calabi_cscs.txt")
    assert isinstance(ans, CalabiAnsatz)
    assert ans.boundary_ok()


def test_io_inline_polynomials():
    text = "type: product\nalpha1: -1\nalpha2: 1\nbeta1: -1\nbeta2: 1\nA: 1 0 -1\nB: 1 0 -1\n"
    ans = ansatz_from_text(text)
    assert ans.labels == Labels(1, -1, -1, 1)


def test_io_errors():
    with pytest.raises(ParseError) as err:
        ansatz_from_text("type: hexagonal\n")
    assert "type" in str(err.value)
    with pytest.raises(ParseError):
        ansatz_from_text("type: calabi\nalpha1: 1\n")
    with pytest.raises(InfeasibleAnsatz):
        ansatz_from_text("type: orthotoric\nalpha1: 2\nalpha2: 4\nbeta1: -1\nbeta2: 1\n"
                         "C_alpha1: 1\nC_alpha2: -1\nC_beta1: -1\nC_beta2: 1\n")


def test_calabi_from_A_labels_consistent():
    params = (Fraction(1), Fraction(3), Fraction(0), Fraction(1))
    ans = calabi_from_A(params, (x - 1) * (3 - x) * (x + 1))
    assert all(r == 0 for r in boundary_residuals(ans.A, ans.B, params, ans.labels))

from fractions import Fraction

import numpy as np
import pytest
import sympy
from scipy.integrate import quad

from extwins.exactnum import Poly, sqrt
from extwins.hirzebruch import (SurfaceClass, conic_matrix_determinant, cscs_root, cscs_twin,
                                degenerate_classes, em_roots, extremal_affine_coeffs, genus_twin, join_params, kahler_class,
                                moment_integrals, profile, profile_from_integral, twin_conic,
                                twin_of)
from extwins.hirzebruch.formulas import twin_residual
from conftest import to_sympy

S, X, A, B = sympy.symbols("s x a b")
# closed-form conic coefficients, used as an independent oracle
B_ = X * (3 * X**2 - 2 * S * X - 1)
D_ = 1 + S * X - 3 * X**2 + S * X**3
F_ = X * (1 - 2 * S * X + X**2)
TWIN = B_ * A * B + D_ * (A + B) + F_


def twin_oracle(s, x, a, b):
    return TWIN.subs({S: s, X: x, A: a, B: b})


def test_surface_class():
    assert SurfaceClass(0, 1).s == 2
    assert SurfaceClass(3, 2).s == -2
    with pytest.raises(ValueError):
        SurfaceClass(0, 0)


@pytest.mark.parametrize("n, x, expected", [(1, Fraction(1, 2), (2, 1)), (2, Fraction(1, 3), (2, 4))])
def test_kahler_class(n, x, expected):
    assert kahler_class(SurfaceClass(0, n), x) == expected


@pytest.mark.parametrize("w, expected", [((11, 9, 1), (2, Fraction(1, 10), False)),
                                         ((51, 50, 3), (3, Fraction(1, 101), True)),
                                         ((2, 1, 1), (1, Fraction(1, 3), True))])
def test_join_params(w, expected):
    jd = join_params(*w)
    assert (jd.n, jd.x, jd.twisted) == expected


def test_moment_integrals_trivial():
    m = moment_integrals(2, Fraction(1, 3), 0)
    assert m.alpha[(0, 5)] == 2
    assert moment_integrals(2, Fraction(1, 10**6), 0).alpha[(1, 5)] != 0
    # the x -> 0 limit of the odd integrand
    assert moment_integrals(2, Fraction(1, 2), 0).alpha[(1, 5)] == Fraction(1, 3)


def test_moment_integrals_vs_quad():
    s, x, c = 2, 0.5, 1 / 3
    m = moment_integrals(s, Fraction(1, 2), Fraction(1, 3))
    for (r, k), value in m.alpha.items():
        num, _ = quad(lambda t: t**r * (1 + x * t) / (c * t + 1) ** k, -1, 1, epsabs=1e-15)
        assert abs(float(value) - num) < 1e-14
    for (r, k), value in m.beta.items():
        inner, _ = quad(lambda t: t**r / (c * t + 1) ** k, -1, 1, epsabs=1e-15)
        num = x * s * inner + (-1) ** r * (1 - x) / (1 - c) ** k + (1 + x) / (1 + c) ** k
        assert abs(float(value) - num) < 1e-13


@pytest.mark.parametrize("s, x, c", [(2, Fraction(1, 2), Fraction(1, 3)),
                                     (1, Fraction(2, 7), Fraction(-3, 5)),
                                     (Fraction(2, 3), Fraction(4, 5), Fraction(1, 9))])
def test_affine_coeffs_vs_quadrature_solve(s, x, c):
    xf, cf = float(x), float(c)

    def alpha(r, k):
        return quad(lambda t: t**r * (1 + xf * t) / (cf * t + 1) ** k, -1, 1, epsabs=1e-15)[0]

    def beta(r, k):
        inner = quad(lambda t: t**r / (cf * t + 1) ** k, -1, 1, epsabs=1e-15)[0]
        return xf * float(s) * inner + (-1) ** r * (1 - xf) / (1 - cf) ** k + (1 + xf) / (1 + cf) ** k

    M = np.array([[alpha(1, 5), alpha(0, 5)], [alpha(2, 5), alpha(1, 5)]])
    rhs = np.array([2 * beta(0, 3), 2 * beta(1, 3)])
    A1, A2 = np.linalg.solve(M, rhs)
    e1, e2 = extremal_affine_coeffs(s, x, c)
    assert abs(float(e1) - A1) < 1e-12 * max(1, abs(A1))
    assert abs(float(e2) - A2) < 1e-12 * max(1, abs(A2))


def test_no_csck_on_f1():
    A1, _ = extremal_affine_coeffs(2, Fraction(1, 2), 0)
    assert A1 != 0


def test_profile_at_c_equals_x():
    pr = profile(2, Fraction(2, 5), Fraction(2, 5))
    z = Poly.var("z")
    assert pr.P == 1 + Fraction(2, 5) * z
    assert pr.positivity.positive


def test_profile_boundary_and_integral():
    x = Fraction(1, 2)
    pr = profile(2, x, Fraction(1, 3))
    F = pr.F
    assert F.evaluate({"z": 1}) == 0 and F.evaluate({"z": -1}) == 0
    assert F.diff("z").evaluate({"z": -1}) == 2 * (1 - x)
    assert F.diff("z").evaluate({"z": 1}) == -2 * (1 + x)
    assert profile_from_integral(2, x, Fraction(1, 3)) == F


def test_conic_determinant_symbolic():
    s, x = Poly.var("s"), Poly.var("x")
    det = to_sympy(conic_matrix_determinant(s, x))
    M = sympy.Matrix([[0, B_ / 2, D_ / 2], [B_ / 2, 0, D_ / 2], [D_ / 2, D_ / 2, F_]])
    assert sympy.expand(det - M.det()) == 0
    factored = X * (3 * X**2 - 2 * S * X - 1) * (1 - X**2) ** 2 * (1 + 2 * S * X + (S**2 - 3) * X**2) / 4
    assert sympy.expand(det - factored) == 0


def test_conic_nondegenerate_for_f1():
    con = twin_conic(2, Fraction(1, 3))
    assert con.classification == "nondegenerate-hyperbola"


def test_degenerate_classes_two_thirds():
    xs = degenerate_classes(Fraction(2, 3))
    assert len(xs) == 2
    for v in xs:
        assert 0 < v < 1
        con = twin_conic(Fraction(2, 3), v)
        assert con.determinant == 0
        assert con.classification == "degenerate"


def test_twin_of_page_family():
    for x in (Fraction(1, 5), Fraction(1, 2), Fraction(7, 9)):
        pair = twin_of(2, x, 0)
        expected = -x * (1 - 4 * x + x**2) / (1 + 2 * x - 3 * x**2 + 2 * x**3)
        if -1 < expected < 1:
            assert pair.b == expected
    pair = twin_of(2, 2 - sqrt(3), 0)
    assert pair.b == 0 and pair.bifurcation


@pytest.mark.parametrize("n", range(3, 11))
def test_sporadic_pair(n):
    pair = twin_of(Fraction(2, n), Fraction(1, n), Fraction(1, n))
    assert pair.b == Fraction(-2, n)
    assert twin_oracle(Fraction(2, n), Fraction(1, n), Fraction(1, n), Fraction(-2, n)) == 0


def test_twin_symmetry():
    s, x, a = 2, Fraction(1, 3), Fraction(-1, 4)
    pair = twin_of(s, x, a)
    back = twin_of(s, x, pair.b)
    assert back.b == a
    assert twin_residual(s, x, a, pair.b) == 0


def test_em_roots_triple_at_four_fifths():
    roots = em_roots(2, Fraction(4, 5))
    assert [r.exact for r in roots] == [Fraction(1, 2)]
    assert roots[0].multiplicity == 3


def test_em_root_single_at_half():
    roots = em_roots(2, Fraction(1, 2))
    assert len(roots) == 1
    assert abs(float(roots[0]) - (2 - 3**0.5)) < 1e-12
    A1, _ = extremal_affine_coeffs(2, Fraction(1, 2), roots[0])
    assert A1 == 0


def test_cscs_root_known_values():
    c = cscs_root(2, Fraction(1, 3))
    assert abs(float(c) - (5 - 2 * 5**0.5) / 5) < 1e-12
    assert c.sign_of(Poly.from_coeffs([1, -10, 5], c.var)) == 0
    c2 = cscs_root(2, Fraction(1, 2))
    assert abs(float(c2) - (4 - 13**0.5) / 3) < 1e-12


def test_cscs_twin():
    pair = cscs_twin(2, Fraction(1, 3))
    b = (-45 + 19 * 5**0.5) / (25 + 9 * 5**0.5)
    assert abs(float(pair.b) - b) < 1e-12
    assert pair.residual.contains_zero() and pair.residual.width < Fraction(1, 10**12)
    assert cscs_twin(2, Fraction(1, 2)) is None


def test_genus_twin_values():
    for g in range(0, 6):
        res = genus_twin(SurfaceClass(g, 2), Fraction(1, 10))
        assert res.b == Fraction(g + 19, 10 * g - 107)
        res = genus_twin(SurfaceClass(g, 1), Fraction(1, 101))
        assert res.b == Fraction(g + 100, 101 * g - 5200)


def test_genus_twin_g21():
    res = genus_twin(SurfaceClass(21, 2), Fraction(1, 10))
    assert SurfaceClass(21, 2).s == -20
    if res.in_range:
        assert twin_oracle(-20, Fraction(1, 10), Fraction(1, 10), res.b) == 0

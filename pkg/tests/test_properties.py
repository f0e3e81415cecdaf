"""Hypothesis properties over exact inputs."""
from fractions import Fraction

import sympy
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from extwins.exactnum import Poly, as_rational_function
from extwins.hirzebruch import profile, profile_from_integral, twin_of
from extwins.hirzebruch.formulas import twin_residual
from extwins.quadrilateral import (calabi_from_A, metric_data, orthotoric_from_A, orthotoric_g,
                                   product_fit, weighted_scal)
from extwins.toric_polytope import barycentric_coords, default_corner, polytope_from_text
from conftest import to_sympy

x, y = Poly.var("x"), Poly.var("y")
SETTINGS = settings(max_examples=40, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])


def fractions(lo, hi, denom=12):
    return st.integers(lo * denom, hi * denom).map(lambda k: Fraction(k, denom))


open_unit = st.integers(1, 23).map(lambda k: Fraction(k, 24))
weight = st.integers(-23, 23).map(lambda k: Fraction(k, 24))
small_poly = st.lists(fractions(-3, 3, 4), min_size=1, max_size=4)


@SETTINGS
@given(small_poly, small_poly, fractions(-2, 2))
def test_poly_ring_matches_sympy(p, q, v):
    P, Q = Poly.from_coeffs(p, "x"), Poly.from_coeffs(q, "x")
    X = sympy.Symbol("x")
    sp = sum(sympy.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(p))
    sq = sum(sympy.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(q))
    assert sympy.expand(to_sympy(P * Q + P.diff("x")) - (sp * sq + sympy.diff(sp, X))) == 0
    assert (P * Q).evaluate({"x": v}) == P.evaluate({"x": v}) * Q.evaluate({"x": v})


@SETTINGS
@given(st.sampled_from([2, 1, Fraction(2, 3), 0, -2]), open_unit, weight)
def test_profile_identity(s, xv, c):
    pr = profile(s, xv, c)
    assert pr.boundary_ok
    assert profile_from_integral(s, xv, c) == pr.F


@SETTINGS
@given(st.sampled_from([2, 1, Fraction(2, 3), Fraction(1, 2), -2]), open_unit, weight)
def test_twin_relation_symmetric(s, xv, a):
    pair = twin_of(s, xv, a)
    assume(pair is not None)
    assert twin_residual(s, xv, a, pair.b) == 0
    assert twin_residual(s, xv, pair.b, a) == 0
    back = twin_of(s, xv, pair.b)
    assert back is not None and back.b == a


def _calabi_instance(a1, gap, root):
    a2 = a1 + gap
    params = (a1, a2, Fraction(0), Fraction(1))
    try:
        return calabi_from_A(params, (x - a1) * (a2 - x) * (x + root))
    except ValueError:
        return None


@SETTINGS
@given(fractions(1, 3), fractions(1, 3), fractions(0, 3),
       fractions(1, 5), fractions(-1, 1), fractions(-1, 1))
def test_calabi_y_squared_coefficient(a1, gap, root, lam, c1, c2):
    assume(a1 > 0 and gap > 0)
    ans = _calabi_instance(a1, gap, root)
    assume(ans is not None)
    data = metric_data(ans)
    w = weighted_scal(data, (lam, c1, c2), check_positive=False)
    A3, A4 = ans.a[3], ans.a[4]
    expected = as_rational_function(c2**2 * (-6 * A3 * x - 12 * A4)) / as_rational_function(x)
    assert (w.coefficient("y", 2) - expected).is_zero()


@SETTINGS
@given(fractions(1, 3), fractions(1, 2), fractions(-2, 2), fractions(-2, 2),
       fractions(-3, 3), fractions(-2, 2))
def test_orthotoric_diagonal(a1, gap, q1, q0, lam, c1):
    assume(gap > 0)
    params = (a1, a1 + gap, a1 - 2, a1 - 1)
    A = (x - a1) * (a1 + gap - x) * (q1 * x + q0 + 3)
    try:
        ans = orthotoric_from_A(params, A)
    except ValueError:
        assume(False)
    g = orthotoric_g(ans, (lam, c1, 0))
    A3, A4, B3, B4 = ans.a[3], ans.a[4], ans.b[3], ans.b[4]
    assert g.subs({"y": x}) == Poly.lift(6 * c1 * (lam * (A3 + B3) - 2 * c1 * (A4 + B4)))


@SETTINGS
@given(fractions(1, 3), fractions(1, 3), fractions(1, 3), fractions(1, 3))
def test_product_fit_matches_sympy_solve(a, b, ca, cb):
    params = (-a, a, -b, b)
    labels = (ca, -ca, -cb, cb)
    ans = product_fit(params, labels)
    X = sympy.Symbol("x")
    k = sympy.symbols("k0:4")
    P = sum(k[i] * X**i for i in range(4))
    R = lambda v: sympy.Rational(v.numerator, v.denominator)  # noqa: E731
    eqs = [P.subs(X, R(-a)), P.subs(X, R(a)),
           sympy.diff(P, X).subs(X, R(-a)) - 2 / R(ca), sympy.diff(P, X).subs(X, R(a)) + 2 / R(ca)]
    sol = sympy.solve(eqs, k, dict=True)[0]
    assert sympy.expand(to_sympy(ans.A) - P.subs(sol)) == 0
    assert all(r == 0 for r in ans.boundary_residuals())


@SETTINGS
@given(st.lists(st.tuples(fractions(-3, 3, 2), fractions(-3, 3, 2)), min_size=3, max_size=8,
                unique=True))
def test_barycentric_reconstruction(points):
    body = "\n".join(f"  {p[0]} {p[1]}" for p in points)
    try:
        poly = polytope_from_text(f"dimension: 2\nvertices:\n{body}\n")
        frame = default_corner(poly)
    except ValueError:
        assume(False)
    for i, v in enumerate(poly.vertices):
        bv = barycentric_coords(poly, frame, i)
        assert sum(bv.alpha) == 1
        assert tuple(sum(a * p[j] for a, p in zip(bv.alpha, frame.points)) for j in range(2)) == v

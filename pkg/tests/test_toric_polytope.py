import random
from fractions import Fraction
from pathlib import Path

import pytest
import sympy

from extwins.data import __file__ as data_init
from extwins.exactnum import Poly
from extwins.textformat import ParseError
from extwins.toric_polytope import (barycentric_coords, build_twin_system,
                                    convex_hull_2d, cscs_line_property, default_corner,
                                    load_polytope, polytope_from_text, simplex_model,
                                    simplex_twin_check, solve_twin_system_2d,
                                    vertex_twin_residual)
from conftest import to_sympy

DATA = Path(data_init).parent


@pytest.fixture
def hexagon():
    return load_polytope(DATA / "hexagon.txt")


@pytest.fixture
def square():
    return load_polytope(DATA / "square.txt")


def test_hexagon_barycentric_p3(hexagon):
    frame = default_corner(hexagon)
    assert frame.points == ((-1, 0), (0, -1), (-1, 1))
    bv = barycentric_coords(hexagon, frame, 3)
    assert bv.alpha == (-2, 1, 2)
    assert sum(bv.alpha) == 1
    assert tuple(sum(a * p[i] for a, p in zip(bv.alpha, frame.points)) for i in range(2)) == bv.point
    assert barycentric_coords(hexagon, frame, 0).alpha == (1, 0, 0)


def test_square_barycentric(square):
    bv = barycentric_coords(square, default_corner(square), 3)
    assert bv.alpha == (-1, 1, 1)


def test_vertex_residual_constant_and_factorisations():
    assert vertex_twin_residual((-2, 1, 2), (5, 5, 5)) == 0
    w0, w1, w2 = (Poly.var(f"w{i}") for i in range(3))
    assert vertex_twin_residual((-1, 1, 1), (w0, w1, w2)) == -2 * (w1 - w0) * (w2 - w0)
    hex_p3 = vertex_twin_residual((-2, 1, 2), (w0, w1, w2))
    assert hex_p3 == -2 * (w2 - w0) ** 2 - 4 * (w2 - w0) * (w1 - w0)


def test_square_system(square):
    system = build_twin_system(square)
    assert len(system.equations) == 1
    d1, d2 = sympy.symbols("d1 d2")
    assert sympy.factor(to_sympy(system.equations[0].form)) == -2 * d1 * d2
    cls = solve_twin_system_2d(system)
    assert cls.kind == "union-of-lines"
    assert sorted(line.direction for line in cls.lines) == [(0, 1), (1, 0)]


def test_hexagon_system(hexagon):
    system = build_twin_system(hexagon)
    assert len(system.equations) == 3
    # sympy Groebner oracle: only the origin solves the system over C
    d1, d2 = sympy.symbols("d1 d2")
    G = sympy.groebner([to_sympy(e.form) for e in system.equations], d1, d2, order="lex")
    assert sympy.solve(list(G), [d1, d2], dict=True) == [{d1: 0, d2: 0}]
    assert solve_twin_system_2d(system).kind == "only-diagonal"


def test_simplex_system_empty():
    poly = load_polytope(DATA / "simplex.txt")
    system = build_twin_system(poly)
    assert system.equations == ()
    assert solve_twin_system_2d(system).kind == "full-space"


def test_convex_hull_drops_interior():
    hull = convex_hull_2d([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
    assert len(hull) == 4 and (1, 1) not in hull


def test_polytope_parse_errors():
    with pytest.raises(ParseError) as err:
        polytope_from_text("dimension: 2\nvertices:\n  0 0\n  1 x\n")
    assert "vertices" in str(err.value)
    with pytest.raises(ParseError):
        polytope_from_text("dimension: 2\n")


def _sympy_simplex_H(n):
    xs = sympy.symbols(f"x1:{n + 1}")
    ells = [1 + x for x in xs]
    H = sympy.Matrix(n, n, lambda i, j: (2 * ells[i] if i == j else 0)
                     - sympy.Rational(2, n + 1) * ells[i] * ells[j])
    return xs, H


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_simplex_eigenfunctions(n):
    xs, H = _sympy_simplex_H(n)
    for j in range(n):
        lap = -sum(sympy.diff(H[i, j], xs[i]) for i in range(n))
        assert sympy.expand(lap - 2 * xs[j]).free_symbols == set()
    model = simplex_model(n)
    assert all(model.H[i][j] == model.H[j][i] for i in range(n) for j in range(n))


def test_simplex_n1_closed_form():
    model = simplex_model(1)
    l1 = 1 + Poly.var("x1")
    assert model.H[0][0] == 2 * l1 - l1**2
    assert -model.H[0][0].diff("x1") == 2 * Poly.var("x1")


def _sympy_weighted_scal(n, f, p):
    xs, H = _sympy_simplex_H(n)
    fs = f[0] + sum(c * x for c, x in zip(f[1:], xs))
    scal = -sum(sympy.diff(H[i, j], xs[i], xs[j]) for i in range(n) for j in range(n))
    lap = -sum(sympy.diff(H[i, j] * sympy.diff(fs, xs[j]), xs[i]) for i in range(n) for j in range(n))
    grad = sum(H[i, j] * sympy.diff(fs, xs[i]) * sympy.diff(fs, xs[j])
               for i in range(n) for j in range(n))
    return sympy.expand(fs**2 * scal - 2 * (p - 1) * fs * lap - p * (p - 1) * grad), xs


def test_simplex_twin_constant_potential():
    for n in (1, 2, 3):
        res = simplex_twin_check(n, [1] + [0] * n)
        assert res.is_affine
        expected, _ = _sympy_weighted_scal(n, [1] + [0] * n, n + 2)
        assert res.coefficients[0] == expected


def test_simplex_twin_n2_half():
    f = [1, Fraction(1, 2), 0]
    res = simplex_twin_check(2, f)
    expected, xs = _sympy_weighted_scal(2, [1, sympy.Rational(1, 2), 0], 4)
    assert sympy.expand(to_sympy(res.value) - expected) == 0
    assert res.is_affine
    assert res.coefficients == (expected.subs({x: 0 for x in xs}),
                                expected.coeff(xs[0]), expected.coeff(xs[1]))


def test_simplex_twin_random_n3():
    rng = random.Random(7)
    for _ in range(5):
        f = [Fraction(4)] + [Fraction(rng.randint(-3, 3), 4) for _ in range(3)]
        res = simplex_twin_check(3, f)
        assert res.is_affine


def test_simplex_rejects_nonpositive():
    with pytest.raises(ValueError):
        simplex_twin_check(2, [0, 1, 0])


def test_cscs_line_property_cases():
    assert cscs_line_property([(1, 2, 3)]).ok
    assert cscs_line_property([(1, 0, 1), (0, 1, 1)]).ok
    bad = cscs_line_property([(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert not bad.ok and bad.max_on_line == 3

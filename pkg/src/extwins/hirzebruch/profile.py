"""Moment integrals, extremal affine coefficients and admissible profiles."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exactnum import (ExactMatrix, Poly, RationalFunction, RootInterval, count_real_roots,
                        integrate_rational_on_interval, isolate_real_roots, solve_linear_exact)
from . import formulas
from .surface import base_scalar, check_class, check_weight

ALPHA_KEYS = ((0, 5), (1, 5), (2, 5), (0, 4), (1, 4))
BETA_KEYS = ((0, 3), (1, 3))

T = Poly.var("t")
Z = Poly.var("z")


def _inv_pow(v, k):
    if isinstance(v, (Poly, RationalFunction)):
        return RationalFunction(1) / v**k
    return Fraction(1) / Fraction(v) ** k


@dataclass(frozen=True)
class MomentIntegrals:
    alpha: dict
    beta: dict
    Q: RationalFunction = field(repr=False)


def _is_symbolic(*vals):
    return any(isinstance(v, (Poly, RationalFunction)) for v in vals)


def moment_integrals(surface, x, c) -> MomentIntegrals:
    """Exact alpha_{r,-k} and beta_{r,-k}; x and c may be rationals or Poly
    symbols."""
    s = base_scalar(surface)
    if not _is_symbolic(x, c):
        x, c = check_class(Fraction(x)), check_weight(Fraction(c))
    base = c * T + 1
    alpha = {}
    for r, k in ALPHA_KEYS:
        alpha[(r, k)] = integrate_rational_on_interval(RationalFunction(T**r * (1 + x * T), base**k))
    beta = {}
    for r, k in BETA_KEYS:
        inner = integrate_rational_on_interval(RationalFunction(T**r, base**k))
        beta[(r, k)] = (x * s * inner + (-1) ** r * _inv_pow(1 - c, k) * (1 - x)
                        + _inv_pow(1 + c, k) * (1 + x))
    A1, A2 = Poly.var("A1"), Poly.var("A2")
    Q = (2 * x * s * RationalFunction(1, base**3)
         - RationalFunction((A1 * T + A2) * (1 + x * T), base**5))
    return MomentIntegrals(alpha, beta, Q)


def _affine_system(m: MomentIntegrals):
    a = m.alpha
    rows = [[a[(1, 5)], a[(0, 5)]], [a[(2, 5)], a[(1, 5)]]]
    rhs = [2 * m.beta[(0, 3)], 2 * m.beta[(1, 3)]]
    return rows, rhs


def extremal_affine_coeffs(surface, x, c):
    """(A1, A2) of the weighted extremal profile.

    Rational x, c give Fractions; an irrational argument (RootInterval)
    gives exact algebraic values; Poly symbols give rational functions.
    """
    if isinstance(x, RootInterval) or isinstance(c, RootInterval):
        return _algebraic_coeffs(surface, x, c)
    m = moment_integrals(surface, x, c)
    rows, rhs = _affine_system(m)
    if _is_symbolic(x, c):
        det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
        A1 = (rhs[0] * rows[1][1] - rows[0][1] * rhs[1]) / det
        A2 = (rows[0][0] * rhs[1] - rows[1][0] * rhs[0]) / det
        return A1, A2
    return solve_linear_exact(ExactMatrix(rows), rhs)


def _algebraic_coeffs(surface, x, c):
    check_class(x)
    check_weight(c)
    symbols = {}
    args = {}
    for name, v in (("x", x), ("c", c)):
        if isinstance(v, RootInterval) and not v.is_rational:
            symbols[name] = v
            args[name] = Poly.var(name)
        else:
            args[name] = v.lo if isinstance(v, RootInterval) else Fraction(v)
    if len(symbols) == 1:
        A1, A2 = extremal_affine_coeffs(surface, args["x"], args["c"])
        from ..exactnum import evaluate_algebraic
        return (evaluate_algebraic(A1, symbols), evaluate_algebraic(A2, symbols))
    raise NotImplementedError("both x and c irrational is not supported")


def em_condition(surface, x, c):
    """alpha_{0,-5} beta_{1,-3} - alpha_{1,-5} beta_{0,-3}; zero iff A1 = 0."""
    m = moment_integrals(surface, x, c)
    return m.alpha[(0, 5)] * m.beta[(1, 3)] - m.alpha[(1, 5)] * m.beta[(0, 3)]


def cscs_condition(surface, x, c):
    m = moment_integrals(surface, x, c)
    return m.alpha[(0, 4)] * m.beta[(1, 3)] - m.alpha[(1, 4)] * m.beta[(0, 3)]


@dataclass(frozen=True)
class Positivity:
    positive: bool
    witness: object = None  # a point or root of P in (-1, 1) when not positive


@dataclass(frozen=True)
class ExtremalProfile:
    s: Fraction
    x: Fraction
    c: Fraction
    A1: Fraction
    A2: Fraction
    P: Poly
    F: Poly
    positivity: Positivity
    boundary_ok: bool

    def theta(self) -> RationalFunction:
        return RationalFunction(self.F, 1 + self.x * Z)


def profile_polynomial(surface, x, c) -> Poly:
    """P_{x,c}(z) from its closed form."""
    s = base_scalar(surface)
    if formulas.profile_denominator(x, c) == 0:
        raise ZeroDivisionError(f"profile denominator vanishes at x={x}, c={c}")
    p0, p1, p2 = formulas.profile_coefficients(s, Fraction(x), Fraction(c))
    return Poly.from_coeffs([p0, p1, p2], "z")


def positivity_on_open_interval(p: Poly, lo=-1, hi=1) -> Positivity:
    roots = isolate_real_roots(p, lo, hi) if not p.is_constant() else []
    if roots:
        return Positivity(False, roots[0])
    mid = Fraction(lo + hi, 2)
    value = p(mid) if not p.is_constant() else p.constant_value()
    return Positivity(value > 0, None if value > 0 else mid)


def boundary_conditions_hold(F: Poly, x) -> bool:
    dF = F.diff("z")
    return (F(1) == 0 and F(-1) == 0
            and dF(1) == -2 * (1 + x) and dF(-1) == 2 * (1 - x))


def profile(surface, x, c) -> ExtremalProfile:
    s = base_scalar(surface)
    x, c = check_class(Fraction(x)), check_weight(Fraction(c))
    A1, A2 = extremal_affine_coeffs(s, x, c)
    P = profile_polynomial(s, x, c)
    F = (1 - Z**2) * P
    return ExtremalProfile(s, x, c, A1, A2, P, F,
                           positivity_on_open_interval(P), boundary_conditions_hold(F, x))


def profile_from_integral(surface, x, c) -> Poly:
    """F_{x,c} built from the double-integral construction."""
    s = base_scalar(surface)
    x, c = check_class(Fraction(x)), check_weight(Fraction(c))
    A1, A2 = extremal_affine_coeffs(s, x, c)
    base = c * T + 1
    integrand = RationalFunction(
        2 * x * s * (Z - T) * base**2 - (A1 * T + A2) * (1 + x * T) * (Z - T), base**5)
    inner = integrate_rational_on_interval(integrand, "t", upper=Z)
    bracket = 2 * (1 - x) / (1 - c) ** 3 * (Z + 1) + inner
    F = RationalFunction((c * Z + 1) ** 3) * bracket
    return F.as_poly() if isinstance(F, RationalFunction) else Poly.lift(F)


def root_count_q(surface, x) -> int:
    s = base_scalar(surface)
    q = formulas.cscs_q(s, Fraction(x), Poly.var("h"))
    return count_real_roots(q, 0, None)

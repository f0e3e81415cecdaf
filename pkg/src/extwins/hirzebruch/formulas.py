"""Closed-form expressions for admissible metrics on ruled surfaces.

Every function here is written for generic ring elements, so it accepts
Fractions for numeric evaluation or Poly variables for symbolic work.
"""
from __future__ import annotations

from fractions import Fraction

from ..exactnum import Poly, RationalFunction, RootInterval, as_fraction, evaluate_algebraic


def conic_coefficients(s, x):
    """(B, D, F) of the twin conic B*a*b + D*a + D*b + F = 0."""
    B = x * (3 * x**2 - 2 * s * x - 1)
    D = 1 + s * x - 3 * x**2 + s * x**3
    F = x * (1 - 2 * s * x + x**2)
    return B, D, F


def twin_residual(s, x, a, b):
    B, D, F = conic_coefficients(s, x)
    return F + D * a + D * b + B * a * b


def twin_partner(s, x, a):
    """Solve the twin equation for b given a (a Mobius map in a)."""
    B, D, F = conic_coefficients(s, x)
    return -(F + D * a) / (D + B * a)


def twin_denominator(s, x, a):
    B, D, _ = conic_coefficients(s, x)
    return D + B * a


def conic_determinant(s, x):
    B, D, F = conic_coefficients(s, x)
    return B * (D**2 - B * F) / 4


def conic_determinant_factored(s, x):
    return x * (3 * x**2 - 2 * s * x - 1) * (1 - x**2) ** 2 * (1 + 2 * s * x + (s**2 - 3) * x**2) / 4


def conic_matrix(s, x):
    B, D, F = conic_coefficients(s, x)
    zero = 0 * x
    return [[zero, B / 2, D / 2], [B / 2, zero, D / 2], [D / 2, D / 2, F]]


def em_polynomial(s, x, c):
    """Einstein-Maxwell condition on the weight c, in factored form."""
    return (c**2 * x - 2 * c + x) * (c**2 * s * x - 2 * c * x - s * x + 2)


def cscs_cubic(s, x, c):
    return ((3 * x**2 + s * x - 1) * c**3 - x * (6 + s * x) * c**2
            + (5 - s * x + x**2) * c + (s * x - 2) * x)


def cscs_q(s, x, ch):
    """The cubic after the substitution c = (1 - ch)/(1 + ch)."""
    return (-(1 + x) ** 2 * ch**3 - (1 + x) * (2 * (1 - x) - s * x) * ch**2
            + (1 - x) * (2 + 2 * x - s * x) * ch + (1 - x) ** 2)


def profile_denominator(x, c):
    return 2 * (3 * c**2 * x**2 - c**2 - 4 * c * x - x**2 + 3)


def profile_coefficients(s, x, c):
    """Coefficients (p0, p1, p2) of the quadratic P with F = (1 - z^2) P."""
    den = profile_denominator(x, c)
    p0 = (c**2 * s * x + 3 * c**2 * x**2 - c**2 - 2 * c * s * x**2 + 3 * c * x**3
          - 7 * c * x + s * x**3 - 4 * x**2 + 6) / den
    p2 = (c - x) * (-c * s * x + 3 * c * x**2 - c + s * x**2 - 2 * x) / den
    return p0, x, p2


def genus_partner(s, x):
    """Twin of a = x, for which P_{x,x} = 1 + x z."""
    return x * (2 - s * x) / (3 * x**2 - s * x - 1)


def evaluate(formula, **args):
    """Evaluate a generic formula at rationals and RootIntervals.

    Irrational arguments become symbols; the symbolic result is then
    evaluated exactly at the algebraic point.
    """
    algebraic = {k: v for k, v in args.items()
                 if isinstance(v, RootInterval) and not v.is_rational}
    plain = {}
    for k, v in args.items():
        if k in algebraic:
            continue
        plain[k] = v.lo if isinstance(v, RootInterval) else as_fraction(v)
    if not algebraic:
        return formula(**plain)
    symbolic = {k: Poly.var(k) for k in algebraic}
    expr = formula(**plain, **symbolic)
    if isinstance(expr, (Poly, RationalFunction)):
        return evaluate_algebraic(expr, algebraic)
    return Fraction(expr)

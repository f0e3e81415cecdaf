"""Exact definite integrals of N(t) / (d0 (1 + g t)^k) over [-1, 1] or [-1, z]."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .poly import Poly, is_scalar
from .ratfunc import RationalFunction, as_rational_function


class UnsupportedIntegrand(ValueError):
    """The integrand is not of the supported (c t + 1)^-k shape, or a
    logarithm would appear in the antiderivative."""


class PoleInInterval(ValueError):
    pass


def _power_form(den: Poly, var: str):
    """Write den = d0 * (1 + g*var)^k; return (d0, g, k)."""
    parts = den.as_univariate(var)
    k = len(parts) - 1
    d0 = parts[0]
    if d0.is_zero():
        raise UnsupportedIntegrand(f"denominator {den} vanishes at {var}=0")
    if k == 0:
        return d0, Fraction(0), 0
    g = as_rational_function(parts[1]) / (d0 * k)
    g = g.simplify()
    t = Poly.var(var)
    if as_rational_function(d0 * (1 + g * t) ** k) != as_rational_function(den):
        raise UnsupportedIntegrand(f"denominator {den} is not a power of a linear form in {var}")
    return d0, g, k


def _antiderivative_poly(p: Poly, var: str) -> Poly:
    out = Poly()
    for k, c in enumerate(p.as_univariate(var)):
        out = out + c * Poly.var(var) ** (k + 1) / (k + 1)
    return out


def integrate_rational_on_interval(f, var: str = "t", upper=1, lower=-1):
    """Definite integral of f d(var) from lower to upper.

    The denominator must be a power of a linear form (c t + 1); the bound
    may be symbolic (a Poly such as ``Poly.var("z")``).  The result is a
    Fraction, Poly or RationalFunction in the remaining symbols.
    """
    f = as_rational_function(f)
    d0, g, k = _power_form(f.den, var)
    num = f.num
    if is_scalar(g) and g != 0:
        pole = -1 / Fraction(g)
        hi = upper if is_scalar(upper) else 1
        if Fraction(lower) <= pole <= Fraction(hi):
            raise PoleInInterval(f"pole at {var}={pole} inside the integration interval")
    if k == 0 or (is_scalar(g) and g == 0):
        anti = _antiderivative_poly(num, var)
        value = anti.subs({var: upper}) - anti.subs({var: lower})
        return _tidy(as_rational_function(value) / d0)

    # substitute u = g t + 1, t = (u - 1)/g, dt = du/g
    coeffs = num.as_univariate(var)
    n = len(coeffs) - 1
    u_coeffs = []
    for j in range(n + 1):
        acc = RationalFunction(0)
        for i in range(j, n + 1):
            if coeffs[i].is_zero():
                continue
            acc = acc + as_rational_function(coeffs[i]) * (comb(i, j) * (-1) ** (i - j)) / as_rational_function(g) ** i
        u_coeffs.append(acc)
    u_hi = g * upper + 1
    u_lo = g * lower + 1
    total = RationalFunction(0)
    for j, m in enumerate(u_coeffs):
        if m.is_zero():
            continue
        e = j - k + 1
        if e == 0:
            raise UnsupportedIntegrand("logarithmic term in the antiderivative")
        total = total + m * (_rf(u_hi) ** e - _rf(u_lo) ** e) / e
    return _tidy(total / (as_rational_function(d0) * g))


def _rf(v) -> RationalFunction:
    return as_rational_function(v)


def _tidy(v):
    v = as_rational_function(v)
    return v.simplify()

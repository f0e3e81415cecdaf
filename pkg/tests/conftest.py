from fractions import Fraction

import pytest
import sympy

from extwins.exactnum import Poly, RationalFunction


def to_sympy(p):
    """Oracle bridge: exact Poly / RationalFunction / Fraction to a sympy expression."""
    if isinstance(p, RationalFunction):
        return to_sympy(p.num) / to_sympy(p.den)
    if isinstance(p, Poly):
        expr = sympy.Integer(0)
        for mono, c in p.terms().items():
            term = sympy.Rational(c.numerator, c.denominator)
            for name, e in mono:
                term *= sympy.Symbol(name) ** e
            expr += term
        return expr
    f = Fraction(p)
    return sympy.Rational(f.numerator, f.denominator)


@pytest.fixture
def sym():
    return to_sympy

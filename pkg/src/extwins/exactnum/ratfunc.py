"""Rational functions in normal form: coprime numerator and denominator,
denominator monic in lexicographic order."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .poly import Poly, gcd, is_scalar


def _lift(value) -> "RationalFunction | None":
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Poly) or is_scalar(value):
        return RationalFunction(value)
    return None


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, reduced: bool = False):
        num = Poly.lift(num)
        den = Poly.lift(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            if num.is_zero():
                den = Poly.const(1)
            elif den.is_constant():
                num = num / den.constant_value()
                den = Poly.const(1)
            else:
                g = gcd(num, den)
                if not g.is_constant():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lc = den.leading_coefficient()
                if lc != 1:
                    num, den = num / lc, den / lc
                if den.is_constant():
                    num, den = num / den.constant_value(), Poly.const(1)
        self.num = num
        self.den = den

    # inspection

    @property
    def variables(self) -> frozenset[str]:
        return self.num.variables | self.den.variables

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.is_constant() and self.num.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value()

    def simplify(self):
        """Collapse to Fraction or Poly when possible."""
        if self.is_constant():
            return self.constant_value()
        if self.is_polynomial():
            return self.num
        return self

    # arithmetic

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        if other.is_constant():
            c = other.constant_value()
            return RationalFunction(self.num * c, self.den, reduced=True) if c else RationalFunction(0)
        # cross-cancel first keeps intermediate sizes small
        g1 = gcd(self.num, other.den)
        g2 = gcd(other.num, self.den)
        n1, d2 = self.num.exact_div(g1), other.den.exact_div(g1)
        n2, d1 = other.num.exact_div(g2), self.den.exact_div(g2)
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k, reduced=True)

    def __eq__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # calculus and substitution

    def diff(self, var: str) -> "RationalFunction":
        dn, dd = self.num.diff(var), self.den.diff(var)
        if dd.is_zero():
            return RationalFunction(dn, self.den)
        return RationalFunction(dn * self.den - self.num * dd, self.den * self.den)

    def subs(self, values: Mapping[str, object]):
        n = self.num.subs(values)
        d = self.den.subs(values)
        n, d = (v.constant_value() if isinstance(v, Poly) and v.is_constant() else v
                for v in (n, d))
        if is_scalar(n) and is_scalar(d):
            return Fraction(n) / Fraction(d)
        return _lift(n) / d

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes at {dict(values)}")
        return self.num.evaluate(values) / d

    def coefficient(self, var: str, k: int) -> "RationalFunction":
        """Coefficient of var**k; requires a denominator free of var."""
        if var in self.den.variables:
            raise ValueError(f"denominator of {self} depends on {var}")
        return RationalFunction(self.num.coeff(var, k), self.den)

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"


def as_rational_function(value) -> RationalFunction:
    rf = _lift(value)
    if rf is None:
        raise TypeError(f"cannot interpret {value!r} as a rational function")
    return rf

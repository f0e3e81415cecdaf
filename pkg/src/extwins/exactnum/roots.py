"""Certified real roots: Sturm sequences, isolation, refinement, and real
algebraic numbers represented by isolating intervals."""
from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Mapping, Sequence

from .poly import (Poly, as_fraction, dense_diff, dense_divmod, dense_eval,
                   dense_gcd, dense_strip, is_scalar, resultant)
from .ratfunc import RationalFunction, as_rational_function


class Interval:
    """Closed interval with rational endpoints, for enclosures."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = as_fraction(lo)
        hi = lo if hi is None else as_fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo, self.hi = lo, hi

    @staticmethod
    def _lift(v) -> "Interval":
        return v if isinstance(v, Interval) else Interval(v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, v) -> bool:
        return self.lo <= v <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def __add__(self, o):
        o = self._lift(o)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        if o.contains_zero():
            raise ZeroDivisionError("interval divisor contains zero")
        return self * Interval(1 / o.hi, 1 / o.lo)

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def __pow__(self, k: int):
        if k == 0:
            return Interval(1)
        if k % 2 == 1 or self.lo >= 0:
            return Interval(min(self.lo ** k, self.hi ** k), max(self.lo ** k, self.hi ** k))
        if self.hi <= 0:
            return Interval(self.hi ** k, self.lo ** k)
        return Interval(0, max(self.lo ** k, self.hi ** k))

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"


def enclose(expr, box: Mapping[str, Interval]) -> Interval:
    """Interval enclosure of a polynomial or rational function over a box."""
    if is_scalar(expr):
        return Interval(expr)
    if isinstance(expr, RationalFunction):
        return enclose(expr.num, box) / enclose(expr.den, box)
    total = Interval(0)
    for mono, c in expr.terms().items():
        term = Interval(c)
        for v, e in mono:
            term = term * box[v] ** e
        total = total + term
    return total


# Sturm machinery on dense ascending coefficient lists

def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def sturm_sequence(p: Poly) -> list[list[Fraction]]:
    a = dense_strip(p.coeffs())
    if not a:
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [a]
    b = dense_diff(a)
    while dense_strip(b):
        seq.append(dense_strip(b))
        _, r = dense_divmod(seq[-2], seq[-1])
        b = [-c for c in r]
    return seq


def _variations_at(seq, x: Fraction | None, side: int = 0) -> int:
    """Sign variations at x, or at -inf/+inf when x is None (side -1/+1)."""
    signs = []
    for q in seq:
        if x is None:
            deg = len(q) - 1
            s = _sign(q[-1]) * (side ** deg if side < 0 else 1)
        else:
            s = _sign(dense_eval(q, x))
        if s:
            signs.append(s)
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_real_roots(p: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi);
    None stands for an infinite endpoint."""
    seq = sturm_sequence(p)
    lo = None if lo is None else as_fraction(lo)
    hi = None if hi is None else as_fraction(hi)
    n = _variations_at(seq, lo, -1) - _variations_at(seq, hi, 1)
    if hi is not None and dense_eval(seq[0], hi) == 0:
        n -= 1
    return n


def cauchy_bound(p: Poly) -> Fraction:
    a = dense_strip(p.coeffs())
    return 1 + max((abs(c / a[-1]) for c in a[:-1]), default=Fraction(0))


def _squarefree_dense(a: list[Fraction]) -> list[Fraction]:
    g = dense_gcd(a, dense_diff(a))
    q, _ = dense_divmod(a, g)
    lc = q[-1]
    return [c / lc for c in q]


def _integer_leading(a: Sequence[Fraction]) -> int:
    """Leading coefficient of the primitive integer multiple of a."""
    den = 1
    for c in a:
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for v in ints:
        g = igcd(g, v)
    return abs(ints[-1] // g)


class RootInterval:
    """A real algebraic number: the unique root of a squarefree polynomial
    in [lo, hi].  When lo == hi the number is that rational.  Rational
    roots are always detected, so ``exact`` is None only for irrationals."""

    __slots__ = ("poly", "lo", "hi", "multiplicity")

    def __init__(self, poly: Poly, lo, hi, multiplicity: int = 1):
        self.poly = poly
        self.lo = as_fraction(lo)
        self.hi = as_fraction(hi)
        self.multiplicity = multiplicity
        if self.lo > self.hi:
            raise ValueError("isolating interval is empty")

    # construction helpers

    @classmethod
    def rational(cls, value) -> "RootInterval":
        v = as_fraction(value)
        return cls(Poly.from_coeffs([-v, 1], "t"), v, v)

    @classmethod
    def _certified(cls, sqf: list[Fraction], var: str, lo: Fraction, hi: Fraction,
                   multiplicity: int = 1) -> "RootInterval":
        """Build from a squarefree dense poly with exactly one root in the
        open interval (lo, hi); tightens endpoints off roots and resolves
        rational roots."""
        poly = Poly.from_coeffs(sqf, var)
        seq = None
        while dense_eval(sqf, lo) == 0 or dense_eval(sqf, hi) == 0:
            m = (lo + hi) / 2
            if dense_eval(sqf, m) == 0:
                return cls(poly, m, m, multiplicity)
            seq = seq or sturm_sequence(poly)
            # Sturm counts roots in the half-open (lo, m]; m itself is no root
            if _variations_at(seq, lo) - _variations_at(seq, m) >= 1:
                hi = m
            else:
                lo = m
        return cls(poly, lo, hi, multiplicity)._resolve_rational(sqf)

    def _resolve_rational(self, sqf: list[Fraction]) -> "RootInterval":
        if self.lo == self.hi:
            return self
        lead = _integer_leading(sqf)
        r = self.refine(Fraction(1, 4 * lead))
        if r.lo == r.hi:
            return r
        k = round((r.lo + r.hi) / 2 * lead)
        cand = Fraction(k, lead)
        if r.lo < cand < r.hi and dense_eval(sqf, cand) == 0:
            return RootInterval(self.poly, cand, cand, self.multiplicity)
        return r

    # basic properties

    @property
    def exact(self) -> Fraction | None:
        return self.lo if self.lo == self.hi else None

    def exact_or_self(self):
        return self.lo if self.lo == self.hi else self

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def var(self) -> str:
        return self.poly.main_variable()

    def interval(self) -> Interval:
        return Interval(self.lo, self.hi)

    def refine(self, tol) -> "RootInterval":
        """Bisect until the width is at most tol."""
        tol = as_fraction(tol)
        if tol <= 0:
            raise ValueError("tolerance must be positive")
        lo, hi = self.lo, self.hi
        if hi - lo <= tol:
            return self
        c = self.poly.coeffs()
        s_lo = _sign(dense_eval(c, lo))
        while hi - lo > tol:
            m = (lo + hi) / 2
            s = _sign(dense_eval(c, m))
            if s == 0:
                return RootInterval(self.poly, m, m, self.multiplicity)
            if s == s_lo:
                lo = m
            else:
                hi = m
        return RootInterval(self.poly, lo, hi, self.multiplicity)

    def __float__(self):
        r = self.refine(Fraction(1, 10 ** 20))
        return float(r.midpoint)

    def to_decimal(self, digits: int = 12) -> str:
        """Render as midpoint ± half-width after refining to 10**-digits."""
        if self.is_rational:
            return format_decimal(self.lo, digits)
        r = self.refine(Fraction(1, 10 ** digits))
        half = r.width / 2
        return f"{format_decimal(r.midpoint, digits + 2)}±{format_sci(half)}"

    # exact sign and comparison

    def sign_of(self, q) -> int:
        """Exact sign of q(self) for a univariate polynomial q."""
        if is_scalar(q):
            return _sign(Fraction(q))
        qc = dense_strip(Poly.lift(q).coeffs())
        if not qc:
            return 0
        if self.is_rational:
            return _sign(dense_eval(qc, self.lo))
        pc = self.poly.coeffs()
        g = dense_gcd(pc, qc)
        if len(g) > 1:
            # a common root inside [lo, hi] must be our root
            if count_real_roots(Poly.from_coeffs(g, "t"), self.lo, self.hi) > 0:
                return 0
        r = self
        qs = _squarefree_dense(qc) if len(qc) > 1 else qc
        qpoly = Poly.from_coeffs(qs, "t")
        while True:
            if (dense_eval(qs, r.lo) != 0 and dense_eval(qs, r.hi) != 0
                    and count_real_roots(qpoly, r.lo, r.hi) == 0):
                return _sign(dense_eval(qc, r.midpoint))
            r = r.refine(r.width / 4)
            if r.is_rational:
                return _sign(dense_eval(qc, r.lo))

    def _compare(self, other) -> int:
        if is_scalar(other):
            return self.sign_of(Poly.from_coeffs([-Fraction(other), 1], "t"))
        if not isinstance(other, RootInterval):
            raise TypeError(f"cannot compare with {other!r}")
        if other.is_rational:
            return self._compare(other.lo)
        if self.is_rational:
            return -other._compare(self.lo)
        if self == other:
            return 0
        a, b = self, other
        while True:
            if a.hi < b.lo:
                return -1
            if b.hi < a.lo:
                return 1
            a = a.refine(a.width / 4)
            b = b.refine(b.width / 4)

    def __eq__(self, other):
        if is_scalar(other):
            return self.sign_of(Poly.from_coeffs([-Fraction(other), 1], "t")) == 0
        if not isinstance(other, RootInterval):
            return NotImplemented
        if self.is_rational or other.is_rational:
            if self.is_rational and other.is_rational:
                return self.lo == other.lo
            return (other == self.lo) if self.is_rational else (self == other.lo)
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            return False
        g = dense_gcd(self.poly.coeffs(), other.poly.coeffs())
        if len(g) <= 1:
            return False
        gp = Poly.from_coeffs(g, "t")
        # common roots strictly inside the overlap, endpoints checked directly
        n = count_real_roots(gp, lo, hi)
        n += sum(1 for e in {lo, hi} if dense_eval(g, e) == 0)
        return n > 0

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __lt__(self, other):
        return self._compare(other) < 0

    def __le__(self, other):
        return self._compare(other) <= 0

    def __gt__(self, other):
        return self._compare(other) > 0

    def __ge__(self, other):
        return self._compare(other) >= 0

    # arithmetic through rational maps

    def apply(self, rf) -> "RootInterval":
        """The algebraic number rf(self) for a univariate rational function."""
        rf = as_rational_function(rf)
        vs = rf.variables
        if len(vs) > 1:
            raise ValueError("apply needs a univariate rational function")
        var = next(iter(vs)) if vs else "t"
        return evaluate_algebraic(rf, {var: self})

    def _mobius(self, num: Sequence, den: Sequence) -> "RootInterval":
        n = Poly.from_coeffs(num, "t")
        d = Poly.from_coeffs(den, "t")
        return self.apply(RationalFunction(n, d))

    def __add__(self, o):
        if not is_scalar(o):
            return NotImplemented
        return self._mobius([o, 1], [1])

    __radd__ = __add__

    def __sub__(self, o):
        if not is_scalar(o):
            return NotImplemented
        return self._mobius([-Fraction(o), 1], [1])

    def __rsub__(self, o):
        if not is_scalar(o):
            return NotImplemented
        return self._mobius([o, -1], [1])

    def __neg__(self):
        return self._mobius([0, -1], [1])

    def __mul__(self, o):
        if not is_scalar(o):
            return NotImplemented
        return self._mobius([0, o], [1])

    __rmul__ = __mul__

    def __truediv__(self, o):
        if not is_scalar(o):
            return NotImplemented
        return self._mobius([0, 1 / Fraction(o)], [1])

    def __rtruediv__(self, o):
        if not is_scalar(o):
            return NotImplemented
        return self._mobius([o], [0, 1])

    def __repr__(self):
        if self.is_rational:
            return f"RootInterval({self.lo})"
        return f"RootInterval({self.poly}, [{self.lo}, {self.hi}])"

    def __str__(self):
        return self.to_decimal()


def isolate_real_roots(p: Poly, lo=None, hi=None) -> list[RootInterval]:
    """Certified isolating intervals for every distinct real root of p in
    the open interval (lo, hi), sorted increasingly.  A subdivision point
    that is itself a root is emitted as a degenerate interval."""
    p = Poly.lift(p)
    if p.is_zero():
        raise ValueError("cannot isolate the roots of the zero polynomial")
    if p.is_constant():
        return []
    var = p.main_variable()
    a = dense_strip(p.coeffs())
    sqf = _squarefree_dense(a)
    sp = Poly.from_coeffs(sqf, var)
    seq = sturm_sequence(sp)
    bound = cauchy_bound(sp)
    lo = -bound if lo is None else max(as_fraction(lo), -bound)
    hi = bound if hi is None else min(as_fraction(hi), bound)
    if lo >= hi:
        return []

    def count(u, v):
        n = _variations_at(seq, u) - _variations_at(seq, v)
        return n - (1 if dense_eval(sqf, v) == 0 else 0)

    found: list[RootInterval] = []
    stack = [(lo, hi)]
    while stack:
        u, v = stack.pop()
        k = count(u, v)
        if k == 0:
            continue
        if k == 1:
            found.append(RootInterval._certified(sqf, var, u, v))
            continue
        m = (u + v) / 2
        if dense_eval(sqf, m) == 0:
            found.append(RootInterval(sp, m, m))
        stack.extend([(u, m), (m, v)])
    found.sort(key=lambda r: r.lo)
    for r in found:
        r.multiplicity = _multiplicity(a, r)
    return found


def _multiplicity(a: list[Fraction], root: RootInterval) -> int:
    m, d = 1, dense_diff(a)
    while d and root.sign_of(Poly.from_coeffs(d, "t")) == 0:
        m += 1
        d = dense_diff(d)
    return m


def refine_root(r: RootInterval, tol) -> RootInterval:
    return r.refine(tol)


def sqrt(value) -> Fraction | RootInterval:
    """Exact square root of a nonnegative rational."""
    v = as_fraction(value)
    if v < 0:
        raise ValueError("square root of a negative number")
    root = isolate_real_roots(Poly.from_coeffs([-v, 0, 1], "t"), 0, None) if v else []
    if not root:
        return Fraction(0)
    r = root[-1]
    return r.exact if r.is_rational else r


def evaluate_algebraic(expr, point: Mapping[str, object]):
    """Value of a polynomial or rational function at a point whose
    coordinates are rationals or RootIntervals.  Returns a Fraction when
    the value is rational, otherwise a certified RootInterval."""
    expr = as_rational_function(expr)
    rationals = {}
    algebraic: dict[str, RootInterval] = {}
    for name, value in point.items():
        if isinstance(value, RootInterval):
            if value.is_rational:
                rationals[name] = value.lo
            else:
                algebraic[name] = value
        else:
            rationals[name] = as_fraction(value)
    if rationals:
        expr = as_rational_function(expr.subs(rationals))
    algebraic = {k: v for k, v in algebraic.items() if k in expr.variables}
    missing = expr.variables - set(algebraic)
    if missing:
        raise ValueError(f"no value for {sorted(missing)}")
    if not algebraic:
        return expr.constant_value()

    y = "_y"
    elim = Poly.var(y) * expr.den - expr.num
    for name, alpha in algebraic.items():
        elim = resultant(elim, alpha.poly.rename(alpha.var, name), name)
    if elim.is_zero() or elim.is_constant():
        raise ZeroDivisionError("denominator vanishes at the algebraic point")
    target = dense_strip(elim.coeffs(y))
    sqf = _squarefree_dense(target)
    sp = Poly.from_coeffs(sqf, "t")

    box = {k: v for k, v in algebraic.items()}
    for _ in range(400):
        intervals = {k: v.interval() for k, v in box.items()}
        try:
            den_box = enclose(expr.den, intervals)
        except ZeroDivisionError:
            den_box = Interval(0)
        if not den_box.contains_zero():
            enc = enclose(expr.num, intervals) / den_box
            inside = count_real_roots(sp, enc.lo, enc.hi)
            inside += sum(1 for e in {enc.lo, enc.hi} if dense_eval(sqf, e) == 0)
            if inside == 1:
                for e in (enc.lo, enc.hi):
                    if dense_eval(sqf, e) == 0:
                        return e
                return RootInterval._certified(sqf, "t", enc.lo, enc.hi).exact_or_self()
            if inside == 0:
                raise ArithmeticError("enclosure lost the value; inconsistent data")
        box = {k: v.refine(v.width / 16) for k, v in box.items()}
        if all(v.is_rational for v in box.values()):
            return evaluate_algebraic(expr, {k: v.lo for k, v in box.items()})
    raise ZeroDivisionError("could not separate the value; the denominator likely vanishes")


def format_decimal(value: Fraction, digits: int) -> str:
    """Round a rational to a fixed number of decimals (half away from zero)."""
    value = as_fraction(value)
    scale = 10 ** digits
    n = abs(value) * scale
    q, r = divmod(n.numerator, n.denominator)
    if 2 * r >= n.denominator:
        q += 1
    sign = "-" if value < 0 and q else ""
    s = str(q).rjust(digits + 1, "0")
    whole, frac = s[:-digits] if digits else s, s[-digits:] if digits else ""
    return f"{sign}{whole}.{frac}" if digits else f"{sign}{whole}"


def format_sci(value: Fraction) -> str:
    """Upper bound of a nonnegative rational as a one-digit scientific string."""
    value = as_fraction(value)
    if value == 0:
        return "0"
    e = 0
    while value >= 10:
        value /= 10
        e += 1
    while value < 1:
        value *= 10
        e -= 1
    mant = -(-value.numerator // value.denominator)  # ceiling keeps it an upper bound
    if mant == 10:
        mant, e = 1, e + 1
    return f"{mant}e{e}"

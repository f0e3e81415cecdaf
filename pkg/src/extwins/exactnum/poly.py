"""Sparse multivariate polynomials over the rationals.

A monomial is a sorted tuple of ``(variable, exponent)`` pairs; the empty
tuple is the constant monomial.  Polynomials are immutable.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[tuple[str, int], ...]

ONE: Monomial = ()


def as_fraction(value) -> Fraction:
    """Coerce an exact scalar (int, Fraction or "p/q" string) to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact scalar: {value!r}")


def is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_div(m1: Monomial, m2: Monomial) -> Monomial | None:
    """m1 / m2 if m2 divides m1, else None."""
    exps = dict(m1)
    for v, e in m2:
        have = exps.get(v, 0)
        if have < e:
            return None
        if have == e:
            del exps[v]
        else:
            exps[v] = have - e
    return tuple(sorted(exps.items()))


def _lex_key(m: Monomial, order: Sequence[str]) -> tuple[int, ...]:
    exps = dict(m)
    return tuple(exps.get(v, 0) for v in order)


class Poly:
    """Immutable polynomial in named variables with Fraction coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            c = as_fraction(coeff)
            if c:
                clean[tuple(sorted(mono))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Poly":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # construction

    @classmethod
    def const(cls, value) -> "Poly":
        c = as_fraction(value)
        return cls._raw({ONE: c} if c else {})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls._raw({((name, 1),): Fraction(1)})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, var: str = "x") -> "Poly":
        """Univariate polynomial from ascending coefficients."""
        terms = {}
        for k, c in enumerate(coeffs):
            c = as_fraction(c)
            if c:
                terms[((var, k),) if k else ONE] = c
        return cls._raw(terms)

    @classmethod
    def from_univariate(cls, coeffs: Sequence["Poly"], var: str) -> "Poly":
        """Inverse of :meth:`as_univariate`: sum of coeffs[k] * var**k."""
        terms: dict[Monomial, Fraction] = {}
        for k, c in enumerate(coeffs):
            c = _coerce(c)
            shift = ((var, k),) if k else ONE
            for m, v in c._terms.items():
                terms[_mono_mul(m, shift)] = v
        return cls._raw(terms)

    @classmethod
    def lift(cls, value) -> "Poly":
        return _coerce(value)

    # inspection

    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(v for m in self._terms for v, _ in m)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == ONE for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self._terms.get(ONE, Fraction(0))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self._terms)
        return max(dict(m).get(var, 0) for m in self._terms)

    def main_variable(self) -> str:
        vs = self.variables
        if len(vs) > 1:
            raise ValueError(f"expected a univariate polynomial, got {self}")
        return next(iter(vs)) if vs else "x"

    def coeffs(self, var: str | None = None) -> list[Fraction]:
        """Dense ascending coefficients of a univariate polynomial."""
        var = var or self.main_variable()
        if self.variables - {var}:
            raise ValueError(f"{self} is not univariate in {var}")
        out = [Fraction(0)] * (self.degree(var) + 1)
        for m, c in self._terms.items():
            out[dict(m).get(var, 0)] = c
        return out

    def as_univariate(self, var: str) -> list["Poly"]:
        """Coefficients (polynomials in the other variables) of powers of var."""
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            e = dict(m).get(var, 0)
            rest = tuple(p for p in m if p[0] != var)
            buckets.setdefault(e, {})[rest] = c
        if not buckets:
            return []
        return [Poly._raw(buckets.get(k, {})) for k in range(max(buckets) + 1)]

    def coeff(self, var: str, k: int) -> "Poly":
        parts = self.as_univariate(var)
        return parts[k] if k < len(parts) else Poly()

    def leading_monomial(self, order: Sequence[str] | None = None) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        order = order or sorted(self.variables)
        return max(self._terms, key=lambda m: _lex_key(m, order))

    def leading_coefficient(self, order: Sequence[str] | None = None) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    # arithmetic

    def __add__(self, other):
        other = _maybe_coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Poly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _maybe_coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _maybe_coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if is_scalar(other):
            c = Fraction(other)
            if not c:
                return Poly()
            return Poly._raw({m: v * c for m, v in self._terms.items()})
        other = _maybe_coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                v = terms.get(m, 0) + c1 * c2
                if v:
                    terms[m] = v
                else:
                    terms.pop(m, None)
        return Poly._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            from .ratfunc import RationalFunction
            return RationalFunction(Poly.const(1), self ** (-k))
        result, base = Poly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if is_scalar(other):
            if not other:
                raise ZeroDivisionError("division of polynomial by zero")
            inv = 1 / Fraction(other)
            return Poly._raw({m: c * inv for m, c in self._terms.items()})
        from .ratfunc import RationalFunction
        if isinstance(other, (Poly, RationalFunction)):
            return RationalFunction(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        from .ratfunc import RationalFunction
        if is_scalar(other):
            return RationalFunction(Poly.const(other), self)
        return NotImplemented

    def __eq__(self, other):
        if is_scalar(other):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # calculus and substitution

    def diff(self, var: str) -> "Poly":
        terms: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            exps = dict(m)
            e = exps.get(var, 0)
            if not e:
                continue
            if e == 1:
                del exps[var]
            else:
                exps[var] = e - 1
            terms[tuple(sorted(exps.items()))] = c * e
        return Poly._raw(terms)

    def subs(self, values: Mapping[str, object]):
        """Substitute values (scalars, polynomials, rational functions, ...)
        for variables.  The result lives in the ring of the values."""
        if not any(v in values for v in self.variables):
            return self
        result = None
        power_cache: dict[tuple[str, int], object] = {}

        def power(v, e):
            key = (v, e)
            if key not in power_cache:
                power_cache[key] = values[v] ** e
            return power_cache[key]

        for m, c in self._terms.items():
            term = c
            keep = []
            for v, e in m:
                if v in values:
                    term = term * power(v, e)
                else:
                    keep.append((v, e))
            if keep:
                term = term * Poly._raw({tuple(keep): Fraction(1)})
            result = term if result is None else result + term
        return Poly() if result is None else result

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        """Evaluate at a point assigning every variable a rational value."""
        missing = self.variables - set(values)
        if missing:
            raise ValueError(f"no value for {sorted(missing)}")
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for v, e in m:
                term *= as_fraction(values[v]) ** e
            total += term
        return total

    def __call__(self, value):
        """Evaluate a univariate polynomial by Horner's rule in the ring of
        ``value`` (Fraction, Interval, Poly, RationalFunction ...)."""
        coeffs = self.coeffs()
        if is_scalar(value):
            acc = Fraction(0)
            v = Fraction(value)
            for c in reversed(coeffs):
                acc = acc * v + c
            return acc
        acc = None
        for c in reversed(coeffs):
            acc = c if acc is None else acc * value + c
        return Fraction(0) if acc is None else acc

    def compose(self, inner: "Poly", var: str | None = None) -> "Poly":
        var = var or self.main_variable()
        return _coerce(self.subs({var: inner}))

    def rename(self, old: str, new: str) -> "Poly":
        if old == new:
            return self
        terms = {}
        for m, c in self._terms.items():
            terms[tuple(sorted((new if v == old else v, e) for v, e in m))] = c
        return Poly._raw(terms)

    # division

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient self / other, raising ValueError unless it is exact."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("exact division by the zero polynomial")
        if other.is_constant():
            return self / other.constant_value()
        order = sorted(self.variables | other.variables)
        lm_d = other.leading_monomial(order)
        lc_d = other._terms[lm_d]
        rem = self
        quot: dict[Monomial, Fraction] = {}
        while rem._terms:
            lm_r = rem.leading_monomial(order)
            q = _mono_div(lm_r, lm_d)
            if q is None:
                raise ValueError(f"{other} does not divide {self}")
            c = rem._terms[lm_r] / lc_d
            quot[q] = quot.get(q, 0) + c
            rem = rem - Poly._raw({q: c}) * other
        return Poly._raw({m: c for m, c in quot.items() if c})

    def divides(self, other: "Poly") -> bool:
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    def monic(self, order: Sequence[str] | None = None) -> "Poly":
        if self.is_zero():
            return self
        return self / self.leading_coefficient(order)

    # display

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        order = sorted(self.variables)
        parts = []
        for m in sorted(self._terms, key=lambda m: _lex_key(m, order), reverse=True):
            c = self._terms[m]
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _maybe_coerce(value) -> Poly | None:
    if isinstance(value, Poly):
        return value
    if is_scalar(value):
        return Poly.const(value)
    return None


def _coerce(value) -> Poly:
    p = _maybe_coerce(value)
    if p is None:
        raise TypeError(f"cannot interpret {value!r} as a polynomial")
    return p


def symbols(names: str) -> tuple[Poly, ...]:
    return tuple(Poly.var(n) for n in names.replace(",", " ").split())


# univariate dense helpers over Q (ascending coefficient lists)

def dense_strip(a: list[Fraction]) -> list[Fraction]:
    while a and not a[-1]:
        a = a[:-1]
    return a


def dense_divmod(a: list[Fraction], b: list[Fraction]):
    b = dense_strip(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = dense_strip(list(a))
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lb
        q[shift] = c
        for i, bi in enumerate(b):
            a[i + shift] -= c * bi
        a = dense_strip(a[:-1]) if not a[-1] else dense_strip(a)
    return q, a


def dense_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = dense_strip(list(a)), dense_strip(list(b))
    while b:
        _, r = dense_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lc = a[-1]
    return [c / lc for c in a]


def dense_eval(a: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def dense_diff(a: Sequence[Fraction]) -> list[Fraction]:
    return [c * k for k, c in enumerate(a)][1:]


# multivariate gcd by the primitive polynomial remainder sequence

def gcd(p: Poly, q: Poly) -> Poly:
    """Monic (in lex order) greatest common divisor over Q."""
    p, q = _coerce(p), _coerce(q)
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.is_constant() or q.is_constant():
        return Poly.const(1)
    names = sorted(p.variables | q.variables)
    if len(names) == 1:
        v = names[0]
        return Poly.from_coeffs(dense_gcd(p.coeffs(v), q.coeffs(v)), v)
    v = names[0]
    if p.degree(v) == 0:
        return gcd(p, content(q, v))
    if q.degree(v) == 0:
        return gcd(content(p, v), q)
    cp, cq = content(p, v), content(q, v)
    h = _prs_gcd(p.exact_div(cp), q.exact_div(cq), v)
    return (gcd(cp, cq) * h).monic()


def content(p: Poly, var: str) -> Poly:
    """gcd of the coefficients of p viewed as a polynomial in var."""
    g = Poly()
    for c in p.as_univariate(var):
        if c.is_zero():
            continue
        g = gcd(g, c)
        if g.is_constant():
            return Poly.const(1)
    return g


def primitive_part(p: Poly, var: str) -> Poly:
    if p.is_zero():
        return p
    return p.exact_div(content(p, var))


def pseudo_remainder(a: Poly, b: Poly, var: str) -> Poly:
    """lc(b)^e * a mod b in var, up to the constant power of lc(b)."""
    A = a.as_univariate(var)
    B = b.as_univariate(var)
    db = len(B) - 1
    lc_b = B[-1]
    R = list(A)
    while len(R) - 1 >= db and R:
        shift = len(R) - 1 - db
        lc_r = R[-1]
        R = [lc_b * r for r in R]
        for i, bi in enumerate(B):
            R[i + shift] = R[i + shift] - lc_r * bi
        while R and R[-1].is_zero():
            R.pop()
    return Poly.from_univariate(R, var)


def _prs_gcd(a: Poly, b: Poly, var: str) -> Poly:
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while not b.is_zero():
        r = pseudo_remainder(a, b, var)
        a, b = b, primitive_part(r, var)
    return primitive_part(a, var)


def squarefree_part(p: Poly) -> Poly:
    v = p.main_variable()
    c = p.coeffs(v)
    g = dense_gcd(c, dense_diff(c))
    q, _ = dense_divmod(c, g) if g else (c, [])
    return Poly.from_coeffs(q, v).monic()


def determinant(rows: Sequence[Sequence]):
    """Fraction-free Bareiss determinant over any exact ring
    (Fraction or Poly entries)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    m = [list(r) for r in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact_quotient(num, prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def _is_zero(v) -> bool:
    return v.is_zero() if isinstance(v, Poly) else v == 0


def _exact_quotient(a, b):
    if isinstance(a, Poly):
        if isinstance(b, Poly):
            return a.exact_div(b)
        return a / b
    if isinstance(b, Poly):
        return _coerce(a).exact_div(b)
    return a / b


def resultant(p: Poly, q: Poly, var: str) -> Poly:
    """Sylvester resultant of p and q with respect to var."""
    P = p.as_univariate(var)
    Q = q.as_univariate(var)
    m, n = len(P) - 1, len(Q) - 1
    if m < 0 or n < 0:
        return Poly()
    if m == 0:
        return P[0] ** n
    if n == 0:
        return Q[0] ** m
    size = m + n
    zero = Poly()
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(P)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(Q)):
            row[i + j] = c
        rows.append(row)
    return _coerce(determinant(rows))

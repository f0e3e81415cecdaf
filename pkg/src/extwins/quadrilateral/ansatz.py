"""Calabi toric, orthotoric and product ansätze fitted from labelled quadrilaterals."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..exactnum import (ExactMatrix, InconsistentSystemError, Poly, RationalFunction,
                        as_fraction, as_rational_function, isolate_real_roots, solve_consistent)
from ..exactnum.poly import is_scalar
from .metric import X, Y

KINDS = ("calabi", "orthotoric", "product")


class BoundarySystemError(ValueError):
    """The boundary conditions admit no polynomial solution of the requested shape."""


@dataclass(frozen=True)
class Labels:
    """Label constants C_alpha1, C_alpha2, C_beta1, C_beta2."""

    alpha1: object
    alpha2: object
    beta1: object
    beta2: object

    def __iter__(self):
        return iter((self.alpha1, self.alpha2, self.beta1, self.beta2))


def _coeff_desc(p, var: str, top: int) -> tuple:
    """Coefficients from degree `top` down to 0, so index k is A_k."""
    rf = as_rational_function(p)
    out = []
    for k in range(top, -1, -1):
        c = rf.coefficient(var, k).simplify()
        out.append(c)
    return tuple(out)


def boundary_residuals(A, B, params: Sequence, labels: Labels) -> tuple:
    """The eight residuals A(a_i), A'(a_i) - 2/C, B(b_i), B'(b_i) + 2/C."""
    a1, a2, b1, b2 = params
    A = as_rational_function(A)
    B = as_rational_function(B)
    dA, dB = A.diff("x"), B.diff("y")
    ca1, ca2, cb1, cb2 = labels
    return (
        A.subs({"x": a1}), A.subs({"x": a2}),
        dA.subs({"x": a1}) - 2 / as_rational_function(ca1),
        dA.subs({"x": a2}) - 2 / as_rational_function(ca2),
        B.subs({"y": b1}), B.subs({"y": b2}),
        dB.subs({"y": b1}) + 2 / as_rational_function(cb1),
        dB.subs({"y": b2}) + 2 / as_rational_function(cb2),
    )


def _all_zero(values) -> bool:
    return all(as_rational_function(v).is_zero() for v in values)


def _positive_inside(p, var: str, lo, hi) -> bool | None:
    """Certified positivity on the open interval; None when not decidable here."""
    rf = as_rational_function(p)
    if rf.variables - {var} or not (is_scalar(lo) and is_scalar(hi)):
        return None
    num, den = rf.num, rf.den
    for q in (num, den):
        if not q.is_constant() and isolate_real_roots(q, lo, hi):
            return False
    mid = (Fraction(lo) + Fraction(hi)) / 2
    return rf.subs({var: mid}) > 0


class _Ansatz:
    kind = ""

    @property
    def vertices(self) -> tuple:
        a1, a2, b1, b2 = self.params
        return ((a1, b1), (a2, b1), (a2, b2), (a1, b2))

    def boundary_residuals(self) -> tuple:
        return boundary_residuals(self.A, self.B, self.params, self.labels)

    def boundary_ok(self) -> bool:
        return _all_zero(self.boundary_residuals())

    def positivity(self) -> bool | None:
        a1, a2, b1, b2 = self.params
        pa = _positive_inside(self.A, "x", a1, a2)
        pb = _positive_inside(self.B, "y", b1, b2)
        if pa is False or pb is False:
            return False
        if pa is None or pb is None:
            return None
        return True


@dataclass(frozen=True)
class CalabiAnsatz(_Ansatz):
    params: tuple
    labels: Labels
    A: Poly
    B: Poly
    kind = "calabi"

    def __post_init__(self):
        a1, a2, b1, b2 = self.params
        if is_scalar(a1) and a1 <= 0:
            raise ValueError(f"Calabi parameter alpha1 must be positive, got {a1}")
        if is_scalar(b1) and b1 < 0:
            raise ValueError(f"Calabi parameter beta1 must be non-negative, got {b1}")

    @property
    def a(self) -> tuple:
        return _coeff_desc(self.A, "x", 4)

    def is_kahler_einstein(self) -> bool:
        a = self.a
        return a[0] == 0 and a[3] == 0


@dataclass(frozen=True)
class OrthotoricAnsatz(_Ansatz):
    params: tuple
    labels: Labels
    A: Poly
    B: Poly
    kind = "orthotoric"

    def __post_init__(self):
        a1, a2, b1, b2 = self.params
        if is_scalar(b2) and is_scalar(a1) and not b2 < a1:
            raise ValueError(f"orthotoric parameters need beta2 < alpha1, got {b2} >= {a1}")

    @property
    def a(self) -> tuple:
        return _coeff_desc(self.A, "x", 4)

    @property
    def b(self) -> tuple:
        return _coeff_desc(self.B, "y", 4)

    def coupling_ok(self) -> bool:
        return all(self.b[j] == -self.a[j] for j in range(3))

    def is_kahler_einstein(self) -> bool:
        return self.a[0] == 0 and self.b[3] == -self.a[3]


@dataclass(frozen=True)
class ProductAnsatz(_Ansatz):
    params: tuple
    labels: Labels
    A: object
    B: object
    free_A: tuple = field(default=())
    free_B: tuple = field(default=())
    kind = "product"

    @property
    def a(self) -> tuple:
        return _coeff_desc(self.A, "x", 3)

    @property
    def b(self) -> tuple:
        return _coeff_desc(self.B, "y", 3)

    def degree(self) -> int:
        return max(as_rational_function(self.A).num.degree("x"),
                   as_rational_function(self.B).num.degree("y"))

    def is_csc(self) -> bool:
        return self.a[0] == 0 and self.b[0] == 0


def _params(params) -> tuple:
    if len(params) != 4:
        raise ValueError("expected four parameters (alpha1, alpha2, beta1, beta2)")
    out = tuple(as_fraction(v) for v in params)
    if not out[0] < out[1] or not out[2] < out[3]:
        raise ValueError(f"parameters must satisfy alpha1 < alpha2 and beta1 < beta2, got {out}")
    return out


def _labels(labels) -> Labels:
    vals = tuple(labels)
    if len(vals) != 4:
        raise ValueError("expected four label constants")
    vals = tuple(as_fraction(v) for v in vals)
    if not (vals[0] > 0 and vals[3] > 0 and vals[1] < 0 and vals[2] < 0):
        raise ValueError("label signs must be C_alpha1, C_beta2 > 0 and C_alpha2, C_beta1 < 0")
    return Labels(*vals)


def _row(poly_coeffs: dict[str, Fraction], unknowns: Sequence[str]) -> list[Fraction]:
    return [poly_coeffs.get(u, Fraction(0)) for u in unknowns]


def _value_row(t, deg: int, names: Sequence[str], deriv: bool = False) -> dict:
    """Row of a(t) or a'(t) for a = sum names[k] t^(deg-k)."""
    row = {}
    for k, name in enumerate(names):
        e = deg - k
        if deriv:
            row[name] = e * t ** (e - 1) if e > 0 else Fraction(0)
        else:
            row[name] = t ** e
    return row


def _solve(rows, rhs, unknowns):
    try:
        sol, free = solve_consistent(ExactMatrix(rows), rhs)
    except InconsistentSystemError as exc:
        raise BoundarySystemError(str(exc)) from None
    return dict(zip(unknowns, sol)), [dict(zip(unknowns, v)) for v in free]


def calabi_fit(params, labels) -> CalabiAnsatz:
    """Unique extremal Calabi data: A quartic, B = -A2 y^2 + B1 y + B0."""
    a1, a2, b1, b2 = _params(params)
    lab = _labels(labels)
    if a1 <= 0 or b1 < 0:
        raise ValueError("Calabi parameters need alpha1 > 0 and beta1 >= 0")
    if lab.beta1 != -lab.beta2:
        raise BoundarySystemError("Calabi labels need C_beta1 = -C_beta2")
    names = ["A0", "A1", "A2", "A3", "A4", "B1", "B0"]
    eqs, rhs = [], []
    for t, C in ((a1, lab.alpha1), (a2, lab.alpha2)):
        eqs.append(_value_row(t, 4, names[:5]))
        rhs.append(0)
        eqs.append(_value_row(t, 4, names[:5], deriv=True))
        rhs.append(2 / C)
    for t, C in ((b1, lab.beta1), (b2, lab.beta2)):
        eqs.append({"A2": -t * t, "B1": t, "B0": Fraction(1)})
        rhs.append(0)
        eqs.append({"A2": -2 * t, "B1": Fraction(1)})
        rhs.append(-2 / C)
    sol, free = _solve([_row(e, names) for e in eqs], rhs, names)
    if free:
        raise BoundarySystemError("Calabi boundary system is under-determined")
    A = Poly.from_coeffs([sol["A4"], sol["A3"], sol["A2"], sol["A1"], sol["A0"]], "x")
    B = Poly.from_coeffs([sol["B0"], sol["B1"], -sol["A2"]], "y")
    return CalabiAnsatz((a1, a2, b1, b2), lab, A, B)


def ortho_fit(params, labels) -> OrthotoricAnsatz | None:
    """Coupled quartics A, B; None when the boundary system is inconsistent."""
    a1, a2, b1, b2 = _params(params)
    lab = _labels(labels)
    if not b2 < a1:
        raise ValueError(f"orthotoric parameters need beta2 < alpha1, got {b2} >= {a1}")
    names = ["A0", "A1", "A2", "A3", "A4", "B3", "B4"]
    eqs, rhs = [], []
    for t, C in ((a1, lab.alpha1), (a2, lab.alpha2)):
        eqs.append(_value_row(t, 4, names[:5]))
        rhs.append(0)
        eqs.append(_value_row(t, 4, names[:5], deriv=True))
        rhs.append(2 / C)
    for t, C in ((b1, lab.beta1), (b2, lab.beta2)):
        eqs.append({"A0": -t**4, "A1": -t**3, "A2": -t**2, "B3": t, "B4": Fraction(1)})
        rhs.append(0)
        eqs.append({"A0": -4 * t**3, "A1": -3 * t**2, "A2": -2 * t, "B3": Fraction(1)})
        rhs.append(-2 / C)
    try:
        sol, free = _solve([_row(e, names) for e in eqs], rhs, names)
    except BoundarySystemError:
        return None
    if free:
        raise BoundarySystemError("orthotoric boundary system is under-determined")
    A = Poly.from_coeffs([sol["A4"], sol["A3"], sol["A2"], sol["A1"], sol["A0"]], "x")
    B = Poly.from_coeffs([sol["B4"], sol["B3"], -sol["A2"], -sol["A1"], -sol["A0"]], "y")
    return OrthotoricAnsatz((a1, a2, b1, b2), lab, A, B)


def _fit_one(var: str, ends, consts, slope_sign: int, cap: int):
    names = [f"c{k}" for k in range(cap + 1)]  # ascending powers
    eqs, rhs = [], []
    for t, C in zip(ends, consts):
        eqs.append([t**k for k in range(cap + 1)])
        rhs.append(0)
        eqs.append([k * t ** (k - 1) if k else Fraction(0) for k in range(cap + 1)])
        rhs.append(slope_sign * 2 / C)
    sol, free = _solve(eqs, rhs, names)
    part = Poly.from_coeffs([sol[n] for n in names], var)
    basis = tuple(Poly.from_coeffs([v[n] for n in names], var) for v in free)
    return part, basis


def product_fit(params, labels, degree_cap: int = 3) -> ProductAnsatz:
    """A, B of degree at most degree_cap; leftover freedom returned as free_A, free_B."""
    if degree_cap not in (3, 4):
        raise ValueError(f"degree cap must be 3 or 4, got {degree_cap}")
    a1, a2, b1, b2 = _params(params)
    lab = _labels(labels)
    A, free_A = _fit_one("x", (a1, a2), (lab.alpha1, lab.alpha2), 1, degree_cap)
    B, free_B = _fit_one("y", (b1, b2), (lab.beta1, lab.beta2), -1, degree_cap)
    return ProductAnsatz((a1, a2, b1, b2), lab, A, B, free_A, free_B)


def lebrun_B(alpha, beta, c):
    """The quartic B(y) of the weighted product family on P1 x P1."""
    q = (alpha**2 + beta**2)
    num = (beta**2 - Y**2) * (6 * alpha * q**2 + (beta - alpha) * c**2 * beta**2
                              - (alpha + beta) * c**2 * Y**2)
    den = 2 * alpha * beta * (3 * q**2 - beta**2 * c**2)
    if is_scalar(den):
        return num / den
    return RationalFunction(num, den)


def lebrun_ansatz(alpha, beta, c) -> ProductAnsatz:
    """Product data with A = (alpha^2 - x^2)/alpha and the quartic B; c may be a symbol."""
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    if alpha <= 0 or beta <= 0:
        raise ValueError("alpha and beta must be positive")
    if is_scalar(c):
        c = as_fraction(c)
        if not c * c * beta * beta < (alpha**2 + beta**2) ** 2:
            raise ValueError("need c^2 beta^2 < (alpha^2 + beta^2)^2")
    A = (alpha**2 - X**2) / alpha
    B = lebrun_B(alpha, beta, c)
    return ProductAnsatz((-alpha, alpha, -beta, beta), Labels(1, -1, -1, 1), A, B)


def _labels_from(A: Poly, B: Poly, params) -> Labels:
    a1, a2, b1, b2 = params
    dA, dB = A.diff("x"), B.diff("y")
    slopes = (dA(a1), dA(a2), dB(b1), dB(b2))
    if any(v == 0 for v in slopes):
        raise BoundarySystemError("a boundary slope vanishes; no label constant fits")
    return Labels(2 / slopes[0], 2 / slopes[1], -2 / slopes[2], -2 / slopes[3])


def calabi_from_A(params, A: Poly) -> CalabiAnsatz:
    """Calabi data with the given A (vanishing at alpha_i); B and labels follow."""
    a1, a2, b1, b2 = _params(params)
    A2 = as_rational_function(A).coefficient("x", 2).simplify()
    B = -A2 * (Y - b1) * (Y - b2)
    return CalabiAnsatz((a1, a2, b1, b2), _labels_from(A, Poly.lift(B), (a1, a2, b1, b2)), A,
                        Poly.lift(B))


def orthotoric_from_A(params, A: Poly) -> OrthotoricAnsatz:
    """Orthotoric data with the given quartic A; B = L - A(y) with L linear."""
    a1, a2, b1, b2 = _params(params)
    Ay = A.rename("x", "y") if "x" in A.variables else A
    v1, v2 = Ay(b1), Ay(b2)
    L = v1 + (v2 - v1) / (b2 - b1) * (Y - b1)
    B = L - Ay
    return OrthotoricAnsatz((a1, a2, b1, b2), _labels_from(A, B, (a1, a2, b1, b2)), A, B)


def product_from_AB(params, A: Poly, B: Poly) -> ProductAnsatz:
    a1, a2, b1, b2 = _params(params)
    return ProductAnsatz((a1, a2, b1, b2), _labels_from(A, B, (a1, a2, b1, b2)), A, B)

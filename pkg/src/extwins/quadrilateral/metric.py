"""Toric metric data in chart coordinates and the weighted scalar curvature.

Everything is computed in the (x, y) chart.  Derivatives along moment
coordinates are expressed through the inverse Jacobian of the moment map,
so that d/dmu_i = J[i][0] d/dx + J[i][1] d/dy.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactnum import (ExactMatrix, InconsistentSystemError, Poly, RationalFunction,
                        as_rational_function, solve_consistent)
from ..exactnum.poly import is_scalar

X = Poly.var("x")
Y = Poly.var("y")
CHART = ("x", "y")

Grid = tuple[tuple[RationalFunction, RationalFunction], tuple[RationalFunction, RationalFunction]]


def _rf(v) -> RationalFunction:
    return as_rational_function(v)


@dataclass(frozen=True)
class ToricMetricData:
    kind: str
    mu: tuple[Poly, Poly]
    H: Grid
    scal: RationalFunction
    jac_inv: Grid
    vertices: tuple[tuple, ...] = ()

    def d_mu(self, i: int, g) -> RationalFunction:
        g = _rf(g)
        row = self.jac_inv[i]
        return row[0] * g.diff("x") + row[1] * g.diff("y")

    def scal_from_H(self) -> RationalFunction:
        """-sum_ij d_mu_i d_mu_j H_ij, the general toric formula."""
        total = RationalFunction(0)
        for i in range(2):
            for j in range(2):
                total = total - self.d_mu(i, self.d_mu(j, self.H[i][j]))
        return total

    def laplacian(self, coeffs: Sequence) -> RationalFunction:
        """Laplacian of c1*mu1 + c2*mu2 (constants are harmonic)."""
        c = [_rf(v) for v in coeffs]
        total = RationalFunction(0)
        for i in range(2):
            flux = self.H[i][0] * c[0] + self.H[i][1] * c[1]
            total = total - self.d_mu(i, flux)
        return total

    def norm_grad_sq(self, coeffs: Sequence) -> RationalFunction:
        c = [_rf(v) for v in coeffs]
        return sum((self.H[i][j] * c[i] * c[j] for i in range(2) for j in range(2)),
                   RationalFunction(0))

    def pullback(self, lam, c1, c2) -> Poly:
        return Poly.lift(lam) + c1 * self.mu[0] + c2 * self.mu[1]


def metric_data(ansatz) -> ToricMetricData:
    A = _rf(ansatz.A)
    B = _rf(ansatz.B)
    dA2 = A.diff("x").diff("x")
    dB2 = B.diff("y").diff("y")
    one, zero = _rf(1), _rf(0)
    kind = ansatz.kind
    if kind == "calabi":
        inv_x = _rf(X).inverse()
        ya = A * Y
        H = ((A * inv_x, ya * inv_x), (ya * inv_x, (B * X**2 + ya * Y) * inv_x))
        J = ((one, -_rf(Y) * inv_x), (zero, inv_x))
        mu = (X, X * Y)
        scal = -(dA2 + dB2) * inv_x
    elif kind == "orthotoric":
        inv = _rf(X - Y).inverse()
        off = A * Y + B * X
        H = (((A + B) * inv, off * inv), (off * inv, (A * Y**2 + B * X**2) * inv))
        J = ((_rf(X) * inv, -_rf(Y) * inv), (-inv, inv))
        mu = (X + Y, X * Y)
        scal = -(dA2 + dB2) * inv
    elif kind == "product":
        H = ((A, zero), (zero, B))
        J = ((one, zero), (zero, one))
        mu = (X, Y)
        scal = -(dA2 + dB2)
    else:
        raise ValueError(f"unknown ansatz kind {kind!r}")
    return ToricMetricData(kind, mu, H, scal, J, tuple(getattr(ansatz, "vertices", ())))


class NonPositivePotential(ValueError):
    pass


def vertex_values(data: ToricMetricData, f: Poly) -> list:
    out = []
    for vx, vy in data.vertices:
        v = Poly.lift(f).subs({"x": vx, "y": vy})
        out.append(v.constant_value() if isinstance(v, Poly) and v.is_constant() else v)
    return out


def weighted_scal(data: ToricMetricData, coeffs: Sequence, p=4, *,
                  check_positive: bool = True) -> RationalFunction:
    """f^2 Scal - 2(p-1) f Lap(f) - p(p-1)|df|^2 for f = lam + c1 mu1 + c2 mu2."""
    lam, c1, c2 = coeffs
    f = data.pullback(lam, c1, c2)
    if check_positive:
        for v in vertex_values(data, f):
            if is_scalar(v) and v <= 0:
                raise NonPositivePotential(f"potential {f} is not positive at every vertex")
    f_rf = _rf(f)
    lap = data.laplacian((c1, c2))
    grad = data.norm_grad_sq((c1, c2))
    return f_rf * f_rf * data.scal - 2 * (p - 1) * f_rf * lap - p * (p - 1) * grad


@dataclass(frozen=True)
class AffineFit:
    is_affine: bool
    coefficients: tuple[Fraction, Fraction, Fraction]
    residual: RationalFunction


def _coefficient_table(polys: Sequence[Poly]):
    monos = sorted({m for p in polys for m in p.terms()})
    return monos, [[p.terms().get(m, Fraction(0)) for p in polys] for m in monos]


def affine_in_moments(r, data: ToricMetricData) -> AffineFit:
    """Decide whether r = lam + c1 mu1 + c2 mu2 as functions on the chart.

    Clearing the denominator gives a linear system in (lam, c1, c2) over the
    monomials of x, y.  When it is inconsistent, the coefficients are the
    exact least-squares fit and the residual is r minus that fit.
    """
    r = _rf(r)
    extra = r.variables - set(CHART)
    if extra:
        raise ValueError(f"affine test needs rational coefficients; free symbols {sorted(extra)}")
    num, den = r.num, r.den
    basis = [den, den * data.mu[0], den * data.mu[1]]
    monos, table = _coefficient_table(basis + [num])
    rows = [row[:3] for row in table]
    rhs = [row[3] for row in table]
    try:
        coeffs, _ = solve_consistent(ExactMatrix(rows), rhs)
        ok = True
    except InconsistentSystemError:
        # normal equations are always consistent
        m = ExactMatrix(rows)
        mt = m.transpose()
        normal = [[sum(a * b for a, b in zip(mt.rows[i], mt.rows[j])) for j in range(3)]
                  for i in range(3)]
        coeffs, _ = solve_consistent(ExactMatrix(normal), mt.apply(rhs))
        ok = False
    coeffs = tuple(Fraction(c) for c in coeffs)
    residual = r - _rf(data.pullback(*coeffs))
    return AffineFit(ok and residual.is_zero(), coeffs, residual)

"""Vertex conditions on twin potentials of a Sasaki-Einstein structure.

An affine potential is written in a corner frame as w = (w0, ..., wk), its
values at the frame vertices.  A twin forces, at every other vertex with
barycentric coordinates alpha, a quadratic equation in d_i = w_i - w0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactnum import Poly, RootInterval, as_fraction, gcd, sqrt
from .polytope import BarycentricVertex, CornerFrame, MomentPolytope, barycentric_coords, default_corner


def vertex_twin_residual(alpha: BarycentricVertex | Sequence, w: Sequence):
    """sum_{i>=1} alpha_i (w_i - w0)^2 - (sum_{i>=1} alpha_i (w_i - w0))^2.

    Entries of w may be rationals or Poly symbols."""
    a = alpha.alpha if isinstance(alpha, BarycentricVertex) else tuple(alpha)
    d = [wi - w[0] for wi in w[1:]]
    lin = sum((ai * di for ai, di in zip(a[1:], d)), Fraction(0))
    sq = sum((ai * di * di for ai, di in zip(a[1:], d)), Fraction(0))
    return sq - lin * lin


def vertex_twin_residual_full(alpha: BarycentricVertex | Sequence, w: Sequence):
    """sum alpha_i w_i^2 - (sum alpha_i w_i)^2 over all frame vertices."""
    a = alpha.alpha if isinstance(alpha, BarycentricVertex) else tuple(alpha)
    lin = sum((ai * wi for ai, wi in zip(a, w)), Fraction(0))
    sq = sum((ai * wi * wi for ai, wi in zip(a, w)), Fraction(0))
    return sq - lin * lin


def difference_symbols(k: int) -> tuple[Poly, ...]:
    return tuple(Poly.var(f"d{i}") for i in range(1, k + 1))


@dataclass(frozen=True)
class VertexEquation:
    vertex: BarycentricVertex
    form: Poly  # quadratic form in d1..dk


@dataclass(frozen=True)
class TwinVertexSystem:
    dimension: int
    frame: CornerFrame
    table: tuple[BarycentricVertex, ...]  # every vertex, base ones included
    equations: tuple[VertexEquation, ...]

    def residuals(self, w: Sequence) -> list[Fraction]:
        return [vertex_twin_residual(eq.vertex, w) for eq in self.equations]


def build_twin_system(poly: MomentPolytope, frame: CornerFrame | None = None) -> TwinVertexSystem:
    frame = frame or default_corner(poly)
    k = poly.dimension
    d = difference_symbols(k)
    w = (Poly(),) + d  # w0 = 0 after the shift d_i = w_i - w0
    table = tuple(barycentric_coords(poly, frame, i) for i in range(len(poly.vertices)))
    eqs = []
    for bv in table:
        if bv.index in frame.indices:
            continue
        form = Poly.lift(vertex_twin_residual(bv, w))
        eqs.append(VertexEquation(bv, form))
    return TwinVertexSystem(k, frame, table, tuple(eqs))


@dataclass(frozen=True)
class SolutionLine:
    """The family w = w0 (1, ..., 1) + t (0, d1, d2) with w0 = 1, restricted
    to the t-range keeping f positive on the polytope (open interval)."""

    direction: tuple
    t_range: tuple


@dataclass(frozen=True)
class TwinClassification:
    kind: str  # "only-diagonal", "union-of-lines" or "full-space"
    common_factor: Poly
    lines: tuple[SolutionLine, ...] = ()

    @property
    def has_twin(self) -> bool:
        return self.kind != "only-diagonal"


def solve_twin_system_2d(system: TwinVertexSystem) -> TwinClassification:
    if system.dimension != 2:
        raise NotImplementedError(f"classification is only supported for k = 2, got k = {system.dimension}")
    forms = [eq.form for eq in system.equations if not eq.form.is_zero()]
    if not forms:
        return TwinClassification("full-space", Poly())
    g = Poly()
    for f in forms:
        g = gcd(g, f)
    if g.is_constant():
        return TwinClassification("only-diagonal", g)
    directions = _real_directions(g)
    lines = []
    for dvec in directions:
        rng = _positive_range(system, dvec)
        if rng is not None:
            lines.append(SolutionLine(dvec, rng))
    if not lines:
        return TwinClassification("only-diagonal", g)
    return TwinClassification("union-of-lines", g, tuple(lines))


def _real_directions(g: Poly) -> list[tuple]:
    """Real projective zeros [d1 : d2] of a binary form of degree <= 2."""
    d1, d2 = "d1", "d2"
    out = []
    # zero with d1 = 0: g(0, 1) == 0
    if g.subs({d1: 0}).subs({d2: 1}) == 0:
        out.append((Fraction(0), Fraction(1)))
    # remaining zeros have d1 = 1: roots of g(1, t)
    h = Poly.lift(g.subs({d1: 1})).rename(d2, "t")
    if h.is_constant():
        return out
    c = h.coeffs("t")
    if len(c) == 2:
        out.append((Fraction(1), -c[0] / c[1]))
    elif len(c) == 3:
        A, B, C = c[2], c[1], c[0]
        disc = B * B - 4 * A * C
        if disc == 0:
            out.append((Fraction(1), -B / (2 * A)))
        elif disc > 0:
            r = sqrt(disc)
            for sgn in (-1, 1):
                v = (-B + sgn * r) / (2 * A)
                out.append((Fraction(1), v.exact_or_self() if isinstance(v, RootInterval) else v))
    return out


def _positive_range(system: TwinVertexSystem, direction) -> tuple | None:
    """Open t-interval where 1 + t * sum_i alpha_i d_i > 0 at every vertex."""
    lo, hi = None, None
    for bv in system.table:
        slope = sum((a * d for a, d in zip(bv.alpha[1:], direction)), Fraction(0))
        if slope == 0:
            continue
        bound = -1 / slope
        bound = bound.exact_or_self() if isinstance(bound, RootInterval) else bound
        if slope > 0:
            lo = bound if lo is None or bound > lo else lo
        else:
            hi = bound if hi is None or bound < hi else hi
    return (lo, hi)


def check_system_consistency(system: TwinVertexSystem, w: Sequence) -> list[Fraction]:
    """Residuals of every vertex equation at w (used for k > 2)."""
    return system.residuals([as_fraction(v) for v in w])


__all__ = [
    "SolutionLine", "TwinClassification", "TwinVertexSystem", "VertexEquation",
    "build_twin_system", "check_system_consistency", "difference_symbols",
    "solve_twin_system_2d", "vertex_twin_residual", "vertex_twin_residual_full",
]

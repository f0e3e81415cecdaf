"""Harness for the geometry of cscS rays inside a Sasaki cone."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..exactnum import (ExactMatrix, Poly, RootInterval, as_fraction, determinant,
                        evaluate_algebraic, rank)


@dataclass(frozen=True)
class RayVerdict:
    ok: bool
    rays: int
    quadric: str  # "trivial" (fewer rays than quadric coefficients) or "fitted"
    max_on_line: int
    note: str = ""


def _entry(v):
    if isinstance(v, RootInterval):
        return v.exact_or_self()
    return as_fraction(v)


def _exact_det(rows) -> Fraction | RootInterval:
    """Determinant of a matrix with rational or algebraic entries."""
    symbols = {}
    sym_rows = []
    for i, row in enumerate(rows):
        sym_row = []
        for j, v in enumerate(row):
            v = _entry(v)
            if isinstance(v, RootInterval):
                name = f"e{i}_{j}"
                symbols[name] = v
                sym_row.append(Poly.var(name))
            else:
                sym_row.append(Poly.const(v))
        sym_rows.append(sym_row)
    det = Poly.lift(determinant(sym_rows))
    if not symbols:
        return det.constant_value()
    return evaluate_algebraic(det, symbols)


def _rank_at_least(vectors, r: int) -> bool:
    m = len(vectors[0])
    for cols in combinations(range(m), r):
        minor = [[v[c] for c in cols] for v in vectors]
        if _exact_det(minor) != 0:
            return True
    return False


def cscs_line_property(rays: Sequence[Sequence]) -> RayVerdict:
    """Check that no projective line carries three or more of the rays and
    that a quadric passes through them all."""
    if not rays:
        raise ValueError("need at least one ray")
    rays = [tuple(_entry(v) for v in r) for r in rays]
    m = len(rays[0])
    if any(len(r) != m for r in rays):
        raise ValueError("rays have different dimensions")
    if any(all(v == 0 for v in r) for r in rays):
        raise ValueError("zero vector is not a ray")
    distinct = []
    for r in rays:
        if all(_rank_at_least([r, q], 2) for q in distinct):
            distinct.append(r)
    # three rays on a line means the triple spans at most a plane
    max_on_line = min(len(distinct), 2)
    for triple in combinations(distinct, 3):
        if m < 3 or not _rank_at_least(list(triple), 3):
            max_on_line = 3
            break
    n_coeffs = m * (m + 1) // 2
    if len(distinct) < n_coeffs:
        quadric, quad_ok = "trivial", True
    elif all(isinstance(v, Fraction) for r in distinct for v in r):
        rows = [[r[i] * r[j] for i in range(m) for j in range(i, m)] for r in distinct]
        quadric, quad_ok = "fitted", rank(ExactMatrix(rows)) < n_coeffs
    else:
        return RayVerdict(False, len(distinct), "undecided", max_on_line,
                          "quadric fit with many algebraic rays is not supported")
    return RayVerdict(max_on_line <= 2 and quad_ok, len(distinct), quadric, max_on_line)

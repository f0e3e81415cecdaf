"""Small exact linear algebra over the rationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import as_fraction, determinant


class SingularMatrixError(ArithmeticError):
    def __init__(self, det: Fraction):
        super().__init__(f"singular matrix (determinant {det})")
        self.determinant = det


class InconsistentSystemError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(as_fraction(v) for v in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows have different lengths")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        vec = [as_fraction(v) for v in vec]
        return tuple(sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self.rows)

    def det(self) -> Fraction:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        return determinant(self.rows)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)))


def _rref(rows: list[list[Fraction]]):
    """Reduced row echelon form in place; returns pivot columns."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(m: ExactMatrix) -> int:
    rows = [list(r) for r in m.rows]
    return len(_rref(rows)) if rows else 0


def solve_linear_exact(m: ExactMatrix, rhs: Sequence) -> tuple[Fraction, ...]:
    """Unique solution of a square nonsingular system."""
    n, k = m.shape
    if n != k:
        raise ValueError(f"solve_linear_exact needs a square matrix, got {n}x{k}")
    if len(rhs) != n:
        raise ValueError("right-hand side has the wrong length")
    det = m.det()
    if det == 0:
        raise SingularMatrixError(det)
    rows = [list(r) + [as_fraction(b)] for r, b in zip(m.rows, rhs)]
    _rref(rows)
    return tuple(r[-1] for r in rows)


def solve_consistent(m: ExactMatrix, rhs: Sequence):
    """General solution of a possibly rectangular system.

    Returns (particular, nullspace_basis); raises InconsistentSystemError
    when no solution exists.
    """
    n, k = m.shape
    rows = [list(r) + [as_fraction(b)] for r, b in zip(m.rows, rhs)]
    pivots = _rref(rows)
    if k in pivots:
        raise InconsistentSystemError("linear system has no solution")
    particular = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        particular[c] = rows[i][-1]
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * k
        v[fcol] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][fcol]
        basis.append(tuple(v))
    return tuple(particular), basis


def nullspace(m: ExactMatrix) -> list[tuple[Fraction, ...]]:
    n, _ = m.shape
    return solve_consistent(m, [0] * n)[1]

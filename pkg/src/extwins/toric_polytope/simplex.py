"""The standard simplex: Fubini-Study symplectic data and its twins."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactnum import Poly, RationalFunction, as_fraction


@dataclass(frozen=True)
class SimplexModel:
    """Labels l_i = 1 + x_i (i >= 1) and l_0 = 1 - sum x_i, with inverse
    Hessian H_ij = 2 delta_ij l_i - 2 l_i l_j / (n + 1)."""

    n: int
    coords: tuple[Poly, ...]
    labels: tuple[Poly, ...]
    H: tuple[tuple[Poly, ...], ...]
    barycenter: tuple[Fraction, ...]

    def divergence(self, j: int) -> Poly:
        """sum_i d H_ij / d x_i."""
        return sum((self.H[i][j].diff(f"x{i + 1}") for i in range(self.n)), Poly())

    def laplacian(self, f) -> RationalFunction:
        """-sum_ij d_i (H_ij d_j f)."""
        total = Poly()
        for i in range(self.n):
            for j in range(self.n):
                total = total + (self.H[i][j] * Poly.lift(f).diff(f"x{j + 1}")).diff(f"x{i + 1}")
        return -total

    def norm_grad_sq(self, f) -> Poly:
        f = Poly.lift(f)
        grads = [f.diff(f"x{i + 1}") for i in range(self.n)]
        return sum((self.H[i][j] * grads[i] * grads[j]
                    for i in range(self.n) for j in range(self.n)), Poly())

    def scal(self) -> Poly:
        return -sum((self.H[i][j].diff(f"x{i + 1}").diff(f"x{j + 1}")
                     for i in range(self.n) for j in range(self.n)), Poly())

    def vertices(self) -> list[tuple[Fraction, ...]]:
        n = self.n
        out = [tuple(Fraction(-1) for _ in range(n))]
        for i in range(n):
            out.append(tuple(Fraction(n) if j == i else Fraction(-1) for j in range(n)))
        return out


def simplex_model(n: int) -> SimplexModel:
    if n < 1:
        raise ValueError("simplex dimension must be at least 1")
    xs = tuple(Poly.var(f"x{i + 1}") for i in range(n))
    ells = tuple(1 + x for x in xs)
    ell0 = 1 - sum(xs, Poly())
    H = tuple(tuple((2 * ells[i] if i == j else Poly()) - Fraction(2, n + 1) * ells[i] * ells[j]
                    for j in range(n)) for i in range(n))
    model = SimplexModel(n, xs, (ell0,) + ells, H, tuple(Fraction(0) for _ in range(n)))
    constants = []
    for j in range(n):
        # Laplacian of x_j is -div_j H; subtracting 2 x_j must leave a constant
        rest = -model.divergence(j) - 2 * xs[j]
        if not rest.is_constant():
            raise ArithmeticError(f"Laplacian of x{j + 1} is not 2 x{j + 1} + const")
        constants.append(-rest.constant_value() / 2)
    return SimplexModel(n, xs, (ell0,) + ells, H, tuple(constants))


@dataclass(frozen=True)
class SimplexTwinResult:
    is_affine: bool
    value: Poly
    coefficients: tuple[Fraction, ...] | None  # (constant, x1, ..., xn)


def simplex_twin_check(n: int, f: Sequence, p: int | None = None,
                       model: SimplexModel | None = None) -> SimplexTwinResult:
    """Weighted scalar curvature of the Fubini-Study metric for the
    potential f = f0 + f1 x1 + ... + fn xn with weight p = n + 2."""
    model = model or simplex_model(n)
    p = n + 2 if p is None else p
    coeffs = [as_fraction(c) for c in f]
    if len(coeffs) != n + 1:
        raise ValueError(f"expected {n + 1} coefficients for an affine function")
    fp = coeffs[0] + sum((c * x for c, x in zip(coeffs[1:], model.coords)), Poly())
    for v in model.vertices():
        if fp.evaluate({f"x{i + 1}": v[i] for i in range(n)}) <= 0:
            raise ValueError(f"potential is not positive at vertex {v}")
    value = (fp * fp * model.scal() - 2 * (p - 1) * fp * model.laplacian(fp)
             - p * (p - 1) * model.norm_grad_sq(fp))
    if value.degree() > 1:
        return SimplexTwinResult(False, value, None)
    const = value.evaluate({f"x{i + 1}": 0 for i in range(n)})
    lin = tuple(value.coeff(f"x{i + 1}", 1).constant_value() if f"x{i + 1}" in value.variables
                else Fraction(0) for i in range(n))
    return SimplexTwinResult(True, value, (const,) + lin)

"""Twin pairs, the twin conic, Einstein-Maxwell and cscS weights."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactnum import (Interval, Poly, RootInterval, as_fraction, determinant, enclose,
                        isolate_real_roots, sqrt)
from . import formulas
from .formulas import evaluate
from .profile import positivity_on_open_interval, Positivity
from .surface import SurfaceClass, base_scalar, check_class, check_weight

Value = Fraction | RootInterval

CERT_WIDTH = Fraction(1, 10**12)


def _value(v) -> Value:
    if isinstance(v, RootInterval):
        return v.exact_or_self()
    return as_fraction(v)


@dataclass(frozen=True)
class TwinPair:
    s: Fraction
    x: Value
    a: Value
    b: Value
    bifurcation: bool
    in_range: bool
    residual: Interval  # certified enclosure of the twin-equation residual

    @property
    def exact(self) -> bool:
        return self.residual.lo == self.residual.hi == 0


def residual_enclosure(s, x, a, b) -> Interval:
    """Exact zero for rational data, otherwise an enclosure of the twin
    equation residual from intervals refined to 1e-15."""
    vals = {"s": s, "x": x, "a": a, "b": b}
    if not any(isinstance(v, RootInterval) and not v.is_rational for v in vals.values()):
        r = formulas.twin_residual(*(v.lo if isinstance(v, RootInterval) else Fraction(v)
                                     for v in vals.values()))
        return Interval(r)
    box = {}
    for k, v in vals.items():
        if isinstance(v, RootInterval):
            box[k] = v.refine(Fraction(1, 10**15)).interval()
        else:
            box[k] = Interval(v)
    expr = formulas.twin_residual(*(Poly.var(k) for k in vals))
    return enclose(expr, box)


def _certify(s, x, a, b) -> Interval:
    res = residual_enclosure(s, x, a, b)
    if not res.contains_zero() or res.width > 2 * CERT_WIDTH:
        raise ArithmeticError(f"twin residual not certified: {res}")
    return res


def twin_of(surface, x, a) -> TwinPair | None:
    """The partner weight b of a, or None if it is undefined or not in (-1, 1)."""
    s = base_scalar(surface)
    x, a = _value(x), _value(a)
    check_class(x)
    check_weight(a)
    denom = evaluate(formulas.twin_denominator, s=s, x=x, a=a)
    if denom == 0:
        return None
    b = _value(evaluate(formulas.twin_partner, s=s, x=x, a=a))
    if not -1 < b < 1:
        return None
    return TwinPair(s, x, a, b, bifurcation=(b == a), in_range=True,
                    residual=_certify(s, x, a, b))


@dataclass(frozen=True)
class TwinConic:
    s: Fraction
    x: Value
    B: Value
    D: Value
    F: Value
    determinant: Value
    classification: str  # "nondegenerate-hyperbola" or "degenerate"
    lines: tuple = ()  # for degenerate conics: ("a", v), ("b", v) or ("a+b", v)
    solutions_in_square: bool | None = None

    @property
    def E(self):
        return self.D


def twin_conic(surface, x) -> TwinConic:
    s = base_scalar(surface)
    x = _value(x)
    check_class(x)
    B, D, F = (_value(evaluate(lambda s, x, i=i: formulas.conic_coefficients(s, x)[i], s=s, x=x))
               for i in range(3))
    det = _value(evaluate(formulas.conic_determinant, s=s, x=x))
    if det != 0:
        return TwinConic(s, x, B, D, F, det, "nondegenerate-hyperbola", solutions_in_square=None)
    if B == 0:
        # D (a + b) + F = 0
        if D == 0:
            return TwinConic(s, x, B, D, F, det, "degenerate", (), solutions_in_square=(F == 0))
        v = _value(evaluate(lambda s, x: -formulas.conic_coefficients(s, x)[2]
                            / formulas.conic_coefficients(s, x)[1], s=s, x=x))
        return TwinConic(s, x, B, D, F, det, "degenerate", (("a+b", v),),
                         solutions_in_square=bool(-2 < v < 2))
    # B (a + D/B)(b + D/B) = 0
    v = _value(evaluate(lambda s, x: -formulas.conic_coefficients(s, x)[1]
                        / formulas.conic_coefficients(s, x)[0], s=s, x=x))
    return TwinConic(s, x, B, D, F, det, "degenerate", (("a", v), ("b", v)),
                     solutions_in_square=bool(-1 < v < 1))


def conic_matrix_determinant(s, x):
    return determinant(formulas.conic_matrix(s, x))


def degenerate_classes(surface) -> list[Value]:
    """Classes x in (0, 1) where the twin conic degenerates."""
    s = base_scalar(surface)
    X = Poly.var("x")
    det = Poly.lift(formulas.conic_determinant_factored(s, X))
    return [r.exact_or_self() for r in isolate_real_roots(det, 0, 1)]


def em_roots(surface, x) -> list[RootInterval]:
    """Weights c in (-1, 1) whose profile has constant weighted scalar
    curvature (A1 = 0).  Multiplicities are recorded on each root."""
    s = base_scalar(surface)
    x = check_class(as_fraction(x))
    C = Poly.var("c")
    return isolate_real_roots(Poly.lift(formulas.em_polynomial(s, x, C)), -1, 1)


def lebrun_em_roots(x) -> dict[str, Value]:
    """Named Einstein-Maxwell weights on F_1 (s = 2): a1 for every x, and
    a21 <= a22 once x >= 4/5."""
    x = check_class(as_fraction(x))
    out: dict[str, Value] = {"a1": _value(1 / x - sqrt(1 - x**2) / x)}
    disc = x * (5 * x - 4)
    if disc >= 0:
        r = sqrt(disc)
        out["a21"] = _value(Fraction(1, 2) - r / (2 * x))
        out["a22"] = _value(Fraction(1, 2) + r / (2 * x))
    return out


def cscs_root(surface, x) -> Value:
    """The unique weight c in (-1, 1) giving a cscS ray."""
    s = base_scalar(surface)
    x = check_class(as_fraction(x))
    h = Poly.var("h")
    q = Poly.lift(formulas.cscs_q(s, x, h))
    roots = isolate_real_roots(q, 0, None)
    if len(roots) != 1:
        raise ArithmeticError(f"expected exactly one positive root of q, found {len(roots)}")
    ch = roots[0]
    if ch.is_rational:
        return (1 - ch.lo) / (1 + ch.lo)
    from ..exactnum import RationalFunction
    return _value(ch.apply(RationalFunction(1 - Poly.var("t"), 1 + Poly.var("t"))))


def cscs_twin(surface, x) -> TwinPair | None:
    a = cscs_root(surface, x)
    pair = twin_of(surface, x, a)
    if pair is None or pair.bifurcation:
        return None
    return pair


@dataclass(frozen=True)
class GenusTwin:
    pair: TwinPair | None
    b: Fraction
    in_range: bool
    positivity_a: Positivity
    positivity_b: Positivity | None


def genus_twin(surface, x) -> GenusTwin:
    """Twin of a = x on a ruled surface of any genus."""
    s = base_scalar(surface)
    x = check_class(as_fraction(x))
    den = 3 * x**2 - s * x - 1
    if den == 0:
        raise ZeroDivisionError(f"twin formula denominator vanishes at s={s}, x={x}")
    b = formulas.genus_partner(s, x)
    in_range = -1 < b < 1
    P_a = Poly.from_coeffs(formulas.profile_coefficients(s, x, x), "z")
    pos_a = positivity_on_open_interval(P_a)
    pos_b = None
    pair = None
    if in_range:
        P_b = Poly.from_coeffs(formulas.profile_coefficients(s, x, b), "z")
        pos_b = positivity_on_open_interval(P_b)
        pair = TwinPair(s, x, x, b, b == x, True, _certify(s, x, x, b))
    return GenusTwin(pair, b, in_range, pos_a, pos_b)


def existence_witness(surface, x) -> tuple[RootInterval | Fraction, Value] | None:
    """A certified twin pair in the open square with a != b.

    For s in {1, 2} the search runs along the segment from (-1, 0) to
    (0, 1); for s <= 2/3 and x <= s along the segment from (-1, -1) to
    (1, 0).  Returns None when the sign test is inconclusive.
    """
    s = base_scalar(surface)
    x = check_class(as_fraction(x))
    tau = Poly.var("u")
    if s in (1, 2):
        a, b = tau - 1, tau
    elif s <= Fraction(2, 3) and x <= s:
        a, b = 2 * tau - 1, tau - 1
    else:
        return None
    g = Poly.lift(formulas.twin_residual(s, x, a, b))
    if g.is_zero():
        return None
    if g.is_constant() or g(0) * g(1) >= 0:
        return None
    roots = isolate_real_roots(g, 0, 1)
    u = roots[0].exact_or_self()
    # a and b are affine in u
    return tuple(_value(e.coeff("u", 0).constant_value() + e.coeff("u", 1).constant_value() * u)
                 for e in (a, b))


def page_class_root() -> RootInterval:
    """The unique root in (0, 1) of 5x^4 - 16x^3 + 18x^2 - 3."""
    X = Poly.var("x")
    roots = isolate_real_roots(5 * X**4 - 16 * X**3 + 18 * X**2 - 3, 0, 1)
    if len(roots) != 1:
        raise ArithmeticError("expected a unique root in (0, 1)")
    return roots[0]


__all__ = [
    "SurfaceClass", "TwinPair", "TwinConic", "GenusTwin", "twin_of", "twin_conic",
    "degenerate_classes", "em_roots", "lebrun_em_roots", "cscs_root", "cscs_twin",
    "genus_twin", "existence_witness", "page_class_root", "residual_enclosure",
    "conic_matrix_determinant",
]

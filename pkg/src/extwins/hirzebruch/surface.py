"""Ruled-surface data: genus, twist, Kähler classes and join parameters."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..exactnum import RootInterval, as_fraction


@dataclass(frozen=True)
class SurfaceClass:
    """The ruled surface P(O + O(n)) over a genus-g curve; g = 0 is F_n."""

    genus: int = 0
    twist: int = 1

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, got {self.genus}")
        if self.twist < 1:
            raise ValueError(f"twist must be a positive integer, got {self.twist}")

    @property
    def s(self) -> Fraction:
        return Fraction(2 * (1 - self.genus), self.twist)


def base_scalar(surface) -> Fraction:
    """Accept a SurfaceClass or a bare value of s."""
    if isinstance(surface, SurfaceClass):
        return surface.s
    s = as_fraction(surface)
    if s > 2:
        raise ValueError(f"s = {s} exceeds 2")
    return s


def check_class(x):
    if not 0 < x < 1:
        raise ValueError(f"class parameter x must lie in (0, 1), got {_show(x)}")
    return x


def check_weight(c):
    if not -1 < c < 1:
        raise ValueError(f"weight parameter c must lie in (-1, 1), got {_show(c)}")
    return c


def _show(v):
    return v.to_decimal() if isinstance(v, RootInterval) else str(v)


def kahler_class(surface: SurfaceClass, x) -> tuple[Fraction, Fraction]:
    """Class coefficients on (E0*, C*) with the common factor 2*pi removed."""
    x = check_class(as_fraction(x))
    return Fraction(2), (1 - x) * surface.twist / x


@dataclass(frozen=True)
class JoinData:
    w1: int
    w2: int
    l1: int
    l2: int
    n: int
    x: Fraction
    twisted: bool


def join_params(w1: int, w2: int, l1: int) -> JoinData:
    if min(w1, w2, l1) < 1:
        raise ValueError("join weights and l1 must be positive integers")
    if w1 <= w2:
        raise ValueError(f"need w1 > w2, got w1={w1}, w2={w2}")
    if gcd(w1, w2) != 1:
        raise ValueError(f"w1={w1} and w2={w2} are not coprime")
    n = l1 * (w1 - w2)
    return JoinData(w1, w2, l1, 1, n, Fraction(w1 - w2, w1 + w2), n % 2 == 1)

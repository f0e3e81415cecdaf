"""Moment polytopes, corner frames and barycentric coordinates."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from ..exactnum import ExactMatrix, SingularMatrixError, rank, solve_linear_exact
from ..textformat import Document, ParseError, parse_document, read_document

Point = tuple[Fraction, ...]


class DegenerateFrame(ValueError):
    pass


@dataclass(frozen=True)
class AffineLabel:
    """l(x) = const + <normal, x>."""

    const: Fraction
    normal: tuple[Fraction, ...]

    def __call__(self, point) -> Fraction:
        return self.const + sum((a * b for a, b in zip(self.normal, point)), Fraction(0))


@dataclass(frozen=True)
class MomentPolytope:
    dimension: int
    vertices: tuple[Point, ...]
    labels: tuple[AffineLabel, ...] | None = None
    lattice: str | None = None
    name: str | None = None

    def __post_init__(self):
        k = self.dimension
        if k < 1:
            raise ValueError("dimension must be positive")
        if len(self.vertices) < k + 1:
            raise ValueError(f"need at least {k + 1} vertices in dimension {k}")
        for v in self.vertices:
            if len(v) != k:
                raise ValueError(f"vertex {v} does not have {k} coordinates")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("repeated vertex")
        if self.labels:
            for lab in self.labels:
                if len(lab.normal) != k:
                    raise ValueError("label normal has the wrong dimension")
                if any(lab(v) < 0 for v in self.vertices):
                    raise ValueError(f"a vertex violates label {lab}")
            for i, v in enumerate(self.vertices):
                tight = [lab.normal for lab in self.labels if lab(v) == 0]
                if not tight or rank(ExactMatrix(tight)) < k:
                    raise ValueError(f"vertex {i} is not a vertex of the labelled polytope")
        if k == 2:
            hull = convex_hull_2d(self.vertices)
            if len(hull) != len(self.vertices):
                raise ValueError("some listed points are not extreme points of the hull")

    def edges(self) -> set[frozenset[int]]:
        """Pairs of vertex indices spanning an edge."""
        k, n = self.dimension, len(self.vertices)
        if k == 1:
            return {frozenset((0, 1))}
        if k == 2:
            hull = convex_hull_2d(self.vertices)
            idx = [self.vertices.index(p) for p in hull]
            return {frozenset((idx[i], idx[(i + 1) % len(idx)])) for i in range(len(idx))}
        if n == k + 1:
            return {frozenset(pair) for pair in combinations(range(n), 2)}
        if not self.labels:
            raise ValueError("edges of a non-simplex polytope in dimension > 2 need labels")
        out = set()
        for i, j in combinations(range(n), 2):
            common = [lab.normal for lab in self.labels
                      if lab(self.vertices[i]) == 0 and lab(self.vertices[j]) == 0]
            if common and rank(ExactMatrix(common)) == k - 1:
                out.add(frozenset((i, j)))
        return out


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points) -> list[Point]:
    """Extreme points in counter-clockwise order (exact monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class CornerFrame:
    indices: tuple[int, ...]
    points: tuple[Point, ...]

    def __post_init__(self):
        p0 = self.points[0]
        diffs = [[a - b for a, b in zip(p, p0)] for p in self.points[1:]]
        if rank(ExactMatrix(diffs)) < len(diffs):
            raise DegenerateFrame(f"frame {self.indices} is affinely dependent")


def corner_frames(poly: MomentPolytope) -> list[CornerFrame]:
    """Every valid corner, ordered lexicographically by vertex indices."""
    k, n = poly.dimension, len(poly.vertices)
    edges = poly.edges()
    frames = []
    for base in range(n):
        nbrs = sorted(j for j in range(n) if frozenset((base, j)) in edges)
        for others in combinations(nbrs, k):
            idx = (base, *others)
            try:
                frames.append(CornerFrame(idx, tuple(poly.vertices[i] for i in idx)))
            except DegenerateFrame:
                continue
    return sorted(frames, key=lambda f: f.indices)


def default_corner(poly: MomentPolytope) -> CornerFrame:
    frames = corner_frames(poly)
    if not frames:
        raise DegenerateFrame("polytope has no valid corner")
    return frames[0]


@dataclass(frozen=True)
class BarycentricVertex:
    index: int
    point: Point
    alpha: tuple[Fraction, ...]


def barycentric_coords(poly: MomentPolytope | None, frame: CornerFrame, vertex) -> BarycentricVertex:
    """Affine coordinates of a vertex (index or point) in the frame."""
    if isinstance(vertex, int):
        index, point = vertex, poly.vertices[vertex]
    else:
        point = tuple(Fraction(v) for v in vertex)
        index = poly.vertices.index(point) if poly and point in poly.vertices else -1
    k = len(point)
    rows = [[p[r] for p in frame.points] for r in range(k)] + [[1] * (k + 1)]
    try:
        alpha = solve_linear_exact(ExactMatrix(rows), list(point) + [1])
    except SingularMatrixError as exc:
        raise DegenerateFrame(str(exc)) from None
    return BarycentricVertex(index, point, alpha)


def parse_polytope(doc: Document) -> MomentPolytope:
    k = doc.integer("dimension")
    if k is None or k < 1:
        raise doc.error("dimension", "must be a positive integer")
    verts = doc.matrix("vertices", width=k)
    if not verts:
        raise doc.error("vertices", "missing or empty vertex block")
    labels = None
    lab_rows = doc.matrix("labels", width=k + 1)
    if lab_rows:
        labels = tuple(AffineLabel(r[0], tuple(r[1:])) for r in lab_rows)
    try:
        return MomentPolytope(k, tuple(tuple(v) for v in verts), labels,
                              doc.text("lattice"), doc.text("name"))
    except ValueError as exc:
        raise doc.error("vertices", str(exc)) from None


def load_polytope(path: str | Path) -> MomentPolytope:
    return parse_polytope(read_document(path))


def polytope_from_text(text: str) -> MomentPolytope:
    return parse_polytope(parse_document(text))


__all__ = [
    "AffineLabel", "BarycentricVertex", "CornerFrame", "DegenerateFrame", "MomentPolytope",
    "ParseError", "barycentric_coords", "convex_hull_2d", "corner_frames", "default_corner",
    "load_polytope", "parse_polytope", "polytope_from_text",
]

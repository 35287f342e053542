"""Exact rational plane geometry for convex polygons and their chords.

Every predicate here is a sign decision on rational determinants, so
coordinates are :class:`fractions.Fraction` throughout.
"""
from __future__ import annotations

import math
import os
import random
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Optional, Sequence

DEFAULT_RETRY_BUDGET = 1000
RETRY_BUDGET_ENV = "POLYREGIONS_RETRY_BUDGET"


class GeometryError(ValueError):
    """Raised when a polygon violates convexity or genericity."""


class Point2(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point2":
        return cls(Fraction(x), Fraction(y))

    def __sub__(self, other):
        return Point2(self.x - other.x, self.y - other.y)

    def __add__(self, other):
        return Point2(self.x + other.x, self.y + other.y)

    def scale(self, k) -> "Point2":
        return Point2(self.x * k, self.y * k)


class Chord(NamedTuple):
    """Segment between polygon vertices ``i < j`` (1-based labels)."""

    i: int
    j: int

    def is_side(self, n: int) -> bool:
        return (self.j - self.i) % n in (1, n - 1)


class PolygonSpec:
    """Strictly convex polygon listed anticlockwise, vertices labelled 1..n."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[Point2], check: bool = True):
        verts = tuple(Point2(Fraction(v[0]), Fraction(v[1])) for v in vertices)
        if len(verts) < 3:
            raise GeometryError("a polygon needs at least 3 vertices")
        if check and not is_strictly_convex_acw(verts):
            raise GeometryError("vertices are not strictly convex in anticlockwise order")
        self.vertices = verts

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex(self, label: int) -> Point2:
        return self.vertices[label - 1]

    def chords(self) -> list[Chord]:
        return [Chord(i, j) for i, j in combinations(range(1, self.n + 1), 2)]

    def diagonals(self) -> list[Chord]:
        return [c for c in self.chords() if not c.is_side(self.n)]

    def segment(self, chord: Chord) -> tuple[Point2, Point2]:
        return self.vertex(chord.i), self.vertex(chord.j)

    def __eq__(self, other):
        return isinstance(other, PolygonSpec) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"PolygonSpec(n={self.n})"


def cross(u: Point2, v: Point2) -> Fraction:
    return u.x * v.y - u.y * v.x


def orient(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of det(b - a, c - a): +1 anticlockwise, 0 collinear, -1 clockwise."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (d > 0) - (d < 0)


def proper_intersection(s1, s2) -> Optional[Point2]:
    """Crossing point of two segments whose open interiors meet transversally.

    Touching at an endpoint, collinear overlap and disjoint segments all
    return ``None``.
    """
    a, b = s1
    c, d = s2
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 >= 0 or o3 * o4 >= 0:
        return None
    r = b - a
    s = d - c
    t = cross(c - a, s) / cross(r, s)
    return Point2(a.x + t * r.x, a.y + t * r.y)


def is_strictly_convex_acw(vertices: Sequence[Point2]) -> bool:
    n = len(vertices)
    if n < 3:
        return False
    if not all(orient(vertices[k], vertices[(k + 1) % n], vertices[(k + 2) % n]) > 0
               for k in range(n)):
        return False
    # positive turns with total winding one: reject star-shaped self-overlap
    o = vertices[0]
    return all(orient(o, vertices[k], vertices[k + 1]) > 0 for k in range(1, n - 1))


def diagonal_crossings(poly: PolygonSpec) -> dict[Point2, list[tuple[Chord, Chord]]]:
    """Map each proper crossing point of two diagonals to the chord pairs producing it."""
    diags = poly.diagonals()
    points: dict[Point2, list[tuple[Chord, Chord]]] = {}
    for c1, c2 in combinations(diags, 2):
        # in convex position only chords with interleaved endpoints cross
        if not (c1.i < c2.i < c1.j < c2.j or c2.i < c1.i < c2.j < c1.j):
            continue
        p = proper_intersection(poly.segment(c1), poly.segment(c2))
        if p is not None:
            points.setdefault(p, []).append((c1, c2))
    return points


def _violating_pairs(pairs: list[tuple[Chord, Chord]]) -> bool:
    chords = {c for pair in pairs for c in pair}
    if len(chords) < 3:
        return False
    for a, b, c in combinations(chords, 3):
        if not ({a.i, a.j} & {b.i, b.j} & {c.i, c.j}):
            return True
    return False


def is_generic(poly: PolygonSpec) -> bool:
    """True iff no three chords with disjoint-enough subscripts share an interior point."""
    return not any(_violating_pairs(pairs) for pairs in diagonal_crossings(poly).values())


def circle_point(t: Fraction) -> Point2:
    """Rational point on the unit circle at angle 2*atan(t)."""
    d = 1 + t * t
    return Point2((1 - t * t) / d, 2 * t / d)


def retry_budget() -> int:
    raw = os.environ.get(RETRY_BUDGET_ENV)
    return int(raw) if raw else DEFAULT_RETRY_BUDGET


def random_generic_polygon(n: int, seed: int, budget: Optional[int] = None,
                           radius_jitter: Fraction = Fraction(1, 20),
                           resolution: int = 4096) -> PolygonSpec:
    """Random strictly convex polygon with generic diagonals, reproducible in ``(n, seed)``.

    Vertices sit on rays at sorted random angles, each scaled by a rational
    radius within ``radius_jitter`` of 1.  Candidates failing convexity or
    genericity are redrawn.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    budget = retry_budget() if budget is None else budget
    rng = random.Random(f"polygon:{n}:{seed}")
    jitter_steps = resolution
    for _ in range(budget):
        angles = sorted(rng.uniform(-math.pi, math.pi) for _ in range(n))
        params = [Fraction(math.tan(a / 2)).limit_denominator(resolution) for a in angles]
        if any(p >= q for p, q in zip(params, params[1:])):
            continue
        verts = []
        for t in params:
            r = 1 + radius_jitter * Fraction(rng.randint(-jitter_steps, jitter_steps), jitter_steps)
            verts.append(circle_point(t).scale(r))
        if not is_strictly_convex_acw(verts):
            continue
        poly = PolygonSpec(verts, check=False)
        if is_generic(poly):
            return poly
    raise GeometryError(f"no generic convex {n}-gon found within {budget} attempts (seed={seed})")

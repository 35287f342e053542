"""Line cycles and point cycles of labelled point sets, and isomorphism search.

Angles are never computed.  Directions are ordered by a half-plane class
followed by a cross-product sign, which is exact on rationals.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations, permutations
from typing import Optional, Sequence

from .exactgeom import GeometryError, Point2, cross, orient

DEFAULT_ISO_BOUND = 8


class PointArrangement:
    """Labelled points ``P_1..P_n`` with no three collinear."""

    __slots__ = ("points",)

    def __init__(self, points: Sequence[Point2], check: bool = True):
        self.points = tuple(Point2(Fraction(p[0]), Fraction(p[1])) for p in points)
        if check:
            for a, b, c in combinations(self.points, 3):
                if orient(a, b, c) == 0:
                    raise GeometryError("three points of the arrangement are collinear")

    @property
    def n(self) -> int:
        return len(self.points)

    def point(self, label: int) -> Point2:
        return self.points[label - 1]

    def labels(self) -> range:
        return range(1, self.n + 1)

    def mapped(self, fn) -> "PointArrangement":
        return PointArrangement([fn(p) for p in self.points])

    def relabelled(self, perm: dict[int, int]) -> "PointArrangement":
        """New arrangement whose label ``perm[i]`` carries the old point ``i``."""
        pts = [None] * self.n
        for i in self.labels():
            pts[perm[i] - 1] = self.point(i)
        return PointArrangement(pts, check=False)


def canonical_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    k = seq.index(min(seq))
    return seq[k:] + seq[:k]


def reversed_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    return canonical_rotation(tuple(reversed(seq)))


def _upper(v: Point2) -> bool:
    return v.y > 0 or (v.y == 0 and v.x > 0)


def _compare_full_turn(u: Point2, v: Point2) -> int:
    hu, hv = _upper(u), _upper(v)
    if hu != hv:
        return -1 if hu else 1
    s = cross(u, v)
    return -1 if s > 0 else (1 if s < 0 else 0)


def _compare_half_turn(u: Point2, v: Point2) -> int:
    s = cross(u, v)
    return -1 if s > 0 else (1 if s < 0 else 0)


def _line_direction(v: Point2) -> Point2:
    return v if _upper(v) else Point2(-v.x, -v.y)


def line_cycle(anchor: Point2, others: dict[int, Point2]) -> tuple[int, ...]:
    """Anticlockwise order in which lines from ``anchor`` to the labelled points are met."""
    dirs = {j: _line_direction(p - anchor) for j, p in others.items()}
    order = sorted(dirs, key=cmp_to_key(lambda a, b: _compare_half_turn(dirs[a], dirs[b])))
    return canonical_rotation(order)


def point_cycle(anchor: Point2, others: dict[int, Point2]) -> tuple[int, ...]:
    """Anticlockwise order of the rays from ``anchor`` to the labelled points."""
    dirs = {j: p - anchor for j, p in others.items()}
    order = sorted(dirs, key=cmp_to_key(lambda a, b: _compare_full_turn(dirs[a], dirs[b])))
    return canonical_rotation(order)


def _others(arr: PointArrangement, i: int) -> dict[int, Point2]:
    return {j: arr.point(j) for j in arr.labels() if j != i}


def line_cycle_at(arr: PointArrangement, i: int) -> tuple[int, ...]:
    return line_cycle(arr.point(i), _others(arr, i))


def point_cycle_at(arr: PointArrangement, i: int) -> tuple[int, ...]:
    return point_cycle(arr.point(i), _others(arr, i))


def on_hull_boundary(arr: PointArrangement, i: int) -> bool:
    """A point is a hull vertex iff its line cycle equals its point cycle."""
    return line_cycle_at(arr, i) == point_cycle_at(arr, i)


def point_in_triangle_via_cycle(q: Point2, a: Point2, b: Point2, c: Point2) -> bool:
    """Interior test read off the cycles of ``q`` against labels a=1, b=2, c=3.

    Inside, the rays to the corners wind once around ``q`` and the line cycle
    is the reverse of the point cycle (``(132)`` for an anticlockwise triangle).
    Outside, ``q`` is a hull vertex of the four points and the two agree.
    """
    tri = {1: a, 2: b, 3: c}
    if any(orient(q, u, v) == 0 for u, v in combinations(tri.values(), 2)) or orient(a, b, c) == 0:
        raise GeometryError("degenerate point/triangle configuration")
    return line_cycle(q, tri) != point_cycle(q, tri)


def point_in_triangle(q: Point2, a: Point2, b: Point2, c: Point2) -> bool:
    s = orient(a, b, c)
    return orient(a, b, q) == s and orient(b, c, q) == s and orient(c, a, q) == s


class IsoKind(enum.Enum):
    PRESERVING = "preserving"
    REVERSING = "reversing"
    NONE = "none"


@dataclass(frozen=True)
class IsoResult:
    kind: IsoKind
    permutation: Optional[dict] = None  # label in a1 -> label in a2

    def __bool__(self):
        return self.kind is not IsoKind.NONE


def _conjugate(cycle: Sequence[int], perm: dict[int, int]) -> tuple[int, ...]:
    return canonical_rotation([perm[v] for v in cycle])


def cycles_match(c1: dict, c2: dict, perm: dict[int, int], kind: IsoKind) -> bool:
    for i, sigma in c1.items():
        image = _conjugate(sigma, perm)
        target = c2[perm[i]]
        if kind is IsoKind.REVERSING:
            target = reversed_cycle(target)
        if image != target:
            return False
    return True


def find_isomorphism(a1: PointArrangement, a2: PointArrangement, *,
                     cycles: str = "line", bound: int = DEFAULT_ISO_BOUND,
                     kinds=(IsoKind.PRESERVING, IsoKind.REVERSING)) -> IsoResult:
    """Search for a relabelling conjugating the cycles of ``a1`` onto those of ``a2``.

    Choosing where label 1 goes and how its cycle lines up with the target
    cycle fixes the whole permutation, so at most ``2 n (n-1)`` candidates are
    tried.  ``cycles="point"`` uses point cycles instead, which is not a valid
    isomorphism test and exists for comparison.
    """
    n = a1.n
    if a2.n != n:
        raise ValueError("arrangements have different sizes")
    if n > bound:
        raise ValueError(f"n={n} exceeds isomorphism search bound {bound}")
    at = line_cycle_at if cycles == "line" else point_cycle_at
    c1 = {i: at(a1, i) for i in a1.labels()}
    c2 = {i: at(a2, i) for i in a2.labels()}
    if n == 1:
        return IsoResult(IsoKind.PRESERVING, {1: 1})
    for kind in kinds:
        src = c1[1]
        for k in a2.labels():
            tgt = c2[k] if kind is IsoKind.PRESERVING else tuple(reversed(c2[k]))
            for shift in range(n - 1):
                perm = {1: k}
                perm.update({src[t]: tgt[(t + shift) % (n - 1)] for t in range(n - 1)})
                if cycles_match(c1, c2, perm, kind):
                    return IsoResult(kind, perm)
    return IsoResult(IsoKind.NONE)


def brute_force_isomorphism(a1: PointArrangement, a2: PointArrangement,
                            cycles: str = "line") -> IsoResult:
    """Exhaustive version of :func:`find_isomorphism` over all n! relabellings."""
    at = line_cycle_at if cycles == "line" else point_cycle_at
    c1 = {i: at(a1, i) for i in a1.labels()}
    c2 = {i: at(a2, i) for i in a2.labels()}
    for kind in (IsoKind.PRESERVING, IsoKind.REVERSING):
        for image in permutations(a2.labels()):
            perm = dict(zip(a1.labels(), image))
            if cycles_match(c1, c2, perm, kind):
                return IsoResult(kind, perm)
    return IsoResult(IsoKind.NONE)


def triangle_incidences(arr: PointArrangement, perm: Optional[dict] = None) -> set:
    """All (d, {a,b,c}) with P_d inside triangle P_aP_bP_c, labels pushed through ``perm``."""
    perm = perm or {i: i for i in arr.labels()}
    out = set()
    for quad in combinations(arr.labels(), 4):
        for d in quad:
            a, b, c = (x for x in quad if x != d)
            if point_in_triangle(arr.point(d), arr.point(a), arr.point(b), arr.point(c)):
                out.add((perm[d], frozenset((perm[a], perm[b], perm[c]))))
    return out


def orientation_signs(arr: PointArrangement, perm: Optional[dict] = None) -> dict:
    perm = perm or {i: i for i in arr.labels()}
    inv = {v: k for k, v in perm.items()}
    return {t: orient(*(arr.point(inv[x]) for x in t))
            for t in combinations(sorted(perm.values()), 3)}


def is_isomorphism(a1: PointArrangement, a2: PointArrangement, perm: dict) -> bool:
    """Direct check: containment of points in triangles is preserved by ``perm``."""
    return triangle_incidences(a1, perm) == triangle_incidences(a2)


def orientation_kind(a1: PointArrangement, a2: PointArrangement, perm: dict) -> IsoKind:
    """Whether ``perm`` keeps, flips or mixes the orientation of every triangle."""
    s1 = orientation_signs(a1, perm)
    s2 = orientation_signs(a2)
    if all(s1[t] == s2[t] for t in s2):
        return IsoKind.PRESERVING
    if all(s1[t] == -s2[t] for t in s2):
        return IsoKind.REVERSING
    return IsoKind.NONE


def random_arrangement(n: int, rng: random.Random, spread: int = 1000) -> PointArrangement:
    while True:
        pts = [Point2(Fraction(rng.randint(-spread, spread)), Fraction(rng.randint(-spread, spread)))
               for _ in range(n)]
        if len(set(pts)) == n and all(orient(a, b, c) != 0 for a, b, c in combinations(pts, 3)):
            return PointArrangement(pts, check=False)


def same_point_cycles_pair(seed: int = 0, spread: int = 6, tries: int = 100000):
    """Find two 4-point arrangements whose point cycles agree label by label but whose
    identity map is not an isomorphism (convex quadrilateral vs triangle with interior point)."""
    rng = random.Random(seed)
    for _ in range(tries):
        a1 = random_arrangement(4, rng, spread)
        a2 = random_arrangement(4, rng, spread)
        if all(point_cycle_at(a1, i) == point_cycle_at(a2, i) for i in a1.labels()) \
                and not is_isomorphism(a1, a2, {i: i for i in a1.labels()}):
            return a1, a2
    raise RuntimeError("no witness pair found")

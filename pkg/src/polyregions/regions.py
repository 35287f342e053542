"""Faces cut out of a convex polygon by its sides and diagonals.

The subdivision is kept as a half-edge structure: each chord is split at its
crossing points, outgoing edges at every node are sorted anticlockwise, and
faces are traced by stepping from an edge to the clockwise neighbour of its
twin.  Bounded faces come out anticlockwise and the outer face clockwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from itertools import combinations
from typing import Optional, Sequence

from . import cycles as cyc
from .arrangements import _compare_full_turn, line_cycle
from .exactgeom import Chord, GeometryError, Point2, PolygonSpec, diagonal_crossings, orient


def region_count_formula(n: int) -> int:
    """Number of regions of a convex n-gon with generic diagonals."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return (n - 1) * (n - 2) * (n * n - 3 * n + 12) // 24


@dataclass
class ChordArrangement:
    polygon: PolygonSpec
    nodes: list  # Point2; the first n are the polygon vertices
    origin: list  # per half-edge
    twin: list
    next: list
    chord: list  # Chord carrying each half-edge
    face: list  # face id per half-edge
    faces: list  # half-edge ids per face, in boundary order
    outer_face: int

    @property
    def n(self) -> int:
        return self.polygon.n

    def dest(self, e: int) -> int:
        return self.origin[self.twin[e]]

    def bounded_faces(self) -> list[int]:
        return [f for f in range(len(self.faces)) if f != self.outer_face]

    def face_points(self, f: int) -> list[Point2]:
        return [self.nodes[self.origin[e]] for e in self.faces[f]]

    def degree(self, node: int) -> int:
        return sum(1 for o in self.origin if o == node)

    @property
    def edge_count(self) -> int:
        return len(self.origin) // 2

    def euler_characteristic(self) -> int:
        return len(self.nodes) - self.edge_count + len(self.faces)

    def interior_edges(self):
        """Yield one half-edge per undirected edge whose both sides are bounded faces."""
        for e in range(0, len(self.origin), 2):
            if self.face[e] != self.outer_face and self.face[e + 1] != self.outer_face:
                yield e


def _signed_area2(points: Sequence[Point2]) -> Fraction:
    total = Fraction(0)
    for k, p in enumerate(points):
        q = points[(k + 1) % len(points)]
        total += p.x * q.y - p.y * q.x
    return total


def build_arrangement(poly: PolygonSpec) -> ChordArrangement:
    n = poly.n
    nodes: list[Point2] = list(poly.vertices)
    on_chord: dict[Chord, list[int]] = {c: [c.i - 1, c.j - 1] for c in poly.chords()}
    for p, pairs in diagonal_crossings(poly).items():
        if len(pairs) > 1:
            raise GeometryError("non-generic polygon: three or more diagonals meet at one point")
        nodes.append(p)
        for c in pairs[0]:
            on_chord[c].append(len(nodes) - 1)

    origin, twin, chord = [], [], []
    for c, pts in on_chord.items():
        a, b = poly.segment(c)
        d = b - a
        pts.sort(key=lambda k: (nodes[k].x - a.x) * d.x + (nodes[k].y - a.y) * d.y)
        for u, v in zip(pts, pts[1:]):
            e = len(origin)
            origin += [u, v]
            twin += [e + 1, e]
            chord += [c, c]

    outgoing: list[list[int]] = [[] for _ in nodes]
    for e, u in enumerate(origin):
        outgoing[u].append(e)
    slot = [0] * len(origin)
    for u, edges in enumerate(outgoing):
        base = nodes[u]
        edges.sort(key=cmp_to_key(lambda e1, e2: _compare_full_turn(
            nodes[origin[twin[e1]]] - base, nodes[origin[twin[e2]]] - base)))
        for k, e in enumerate(edges):
            slot[e] = k

    nxt = [0] * len(origin)
    for e in range(len(origin)):
        t = twin[e]
        around = outgoing[origin[t]]
        nxt[e] = around[slot[t] - 1]

    face = [-1] * len(origin)
    faces: list[list[int]] = []
    for start in range(len(origin)):
        if face[start] >= 0:
            continue
        loop, e = [], start
        while face[e] < 0:
            face[e] = len(faces)
            loop.append(e)
            e = nxt[e]
        faces.append(loop)

    outer = [f for f, loop in enumerate(faces)
             if _signed_area2([nodes[origin[e]] for e in loop]) < 0]
    if len(outer) != 1:
        raise GeometryError(f"expected one outer face, found {len(outer)}")
    return ChordArrangement(poly, nodes, origin, twin, nxt, chord, face, faces, outer[0])


classify_cached = lru_cache(maxsize=None)(cyc.classify)


@dataclass(frozen=True)
class RegionInfo:
    face_id: int
    representative: Point2
    cycle: tuple
    classification: Optional[cyc.Classification]
    side_count: int
    boundary: tuple  # Point2 corners, anticlockwise

    def contains(self, q: Point2) -> bool:
        b = self.boundary
        return all(orient(b[k], b[(k + 1) % len(b)], q) > 0 for k in range(len(b)))


def region_cycle(poly: PolygonSpec, q: Point2) -> tuple:
    """Line cycle of an interior point against the polygon vertices, starting at 1."""
    return cyc.canonicalize(line_cycle(q, {k: poly.vertex(k) for k in range(1, poly.n + 1)}))


def _centroid(points: Sequence[Point2]) -> Point2:
    k = len(points)
    return Point2(sum((p.x for p in points), Fraction(0)) / k,
                  sum((p.y for p in points), Fraction(0)) / k)


def regions_of(arr: ChordArrangement, classify: bool = True) -> list[RegionInfo]:
    out = []
    for f in arr.bounded_faces():
        corners = arr.face_points(f)
        rep = _centroid(corners)
        c = region_cycle(arr.polygon, rep)
        cls = classify_cached(c) if classify and arr.n >= 3 else None
        out.append(RegionInfo(f, rep, c, cls, len(corners), tuple(corners)))
    return out


def enumerate_regions(poly: PolygonSpec, classify: bool = True) -> list[RegionInfo]:
    return regions_of(build_arrangement(poly), classify)


def occurring_cycles(poly: PolygonSpec) -> set:
    return {r.cycle for r in enumerate_regions(poly, classify=False)}


def region_containing(regions: Sequence[RegionInfo], q: Point2) -> Optional[RegionInfo]:
    for r in regions:
        if r.contains(q):
            return r
    return None


def neighbor_swap_check(arr: ChordArrangement, regions: Sequence[RegionInfo]) -> bool:
    """Across every interior edge on chord P_iP_j the two cycles differ by swapping i and j."""
    by_face = {r.face_id: r.cycle for r in regions}
    for e in arr.interior_edges():
        c1 = by_face.get(arr.face[e])
        c2 = by_face.get(arr.face[arr.twin[e]])
        if c1 is None or c2 is None:
            return False
        i, j = arr.chord[e]
        try:
            if cyc.swap_adjacent(c1, i, j) != c2:
                return False
            cyc.swap_adjacent(c2, i, j)
        except cyc.CycleError:
            return False
    return True


def triangle_coherence(poly: PolygonSpec, regions: Sequence[RegionInfo]) -> bool:
    """Region inside triangle P_iP_jP_k (by orientation signs) iff its cycle contains (i k j)."""
    from .arrangements import point_in_triangle

    for r in regions:
        for i, j, k in combinations(range(1, poly.n + 1), 3):
            inside = point_in_triangle(r.representative, poly.vertex(i), poly.vertex(j), poly.vertex(k))
            if inside != cyc.contains_subcycle_ikj(r.cycle, i, j, k):
                return False
    return True

"""Construct a convex polygon containing a region with a prescribed cycle.

Put the target region's point P at the origin.  The k-th label of the cycle
gets a line through P at angle theta_k, increasing in k within [0, pi).  The
vertex for label j sits on the ray at theta_j when j is in the first row of
the standard decomposition and on the opposite ray otherwise, which makes the
ray angles increase with the label.  With radii close to 1 the vertices are in
convex position around P, and the line cycle at P is the target cycle.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from . import cycles as cyc
from .exactgeom import (GeometryError, Point2, PolygonSpec, circle_point, is_generic,
                        is_strictly_convex_acw, orient, retry_budget)
from .regions import RegionInfo, enumerate_regions, region_containing

ORIGIN = Point2(Fraction(0), Fraction(0))


class RealizationError(RuntimeError):
    def __init__(self, cycle, message):
        super().__init__(f"{cyc.format_cycle(cycle)}: {message}")
        self.cycle = tuple(cycle)


def ray_parameters(n: int, rng: random.Random, resolution: int = 1 << 12) -> list[Fraction]:
    """Increasing tan-half-angle parameters for angles in [0, pi), the first one 0.

    Angles are jittered around k*pi/n, keeping neighbours at least pi/(4n) apart.
    """
    params = [Fraction(0)]
    for k in range(1, n):
        theta = math.pi * (k + rng.uniform(-0.375, 0.375)) / n
        params.append(Fraction(math.tan(theta / 2)).limit_denominator(resolution))
    return params


def block_rule_vertices(c: Sequence[int], params: Sequence[Fraction],
                        radii: Sequence[Fraction]) -> list[Point2]:
    """Vertex j on the ray of its line, flipped to the far side for second-row labels."""
    l = cyc.standard_decomposition(c).l
    verts = [None] * len(c)
    for k, label in enumerate(c):
        u = circle_point(params[k]).scale(radii[label - 1])
        verts[label - 1] = u if label <= l else Point2(-u.x, -u.y)
    return verts


def _avoids_origin(verts: Sequence[Point2]) -> bool:
    return all(orient(a, b, ORIGIN) != 0 for a, b in combinations(verts, 2))


def realized_region(poly: PolygonSpec, c: Sequence[int],
                    regions: Optional[Sequence[RegionInfo]] = None) -> Optional[RegionInfo]:
    """The region of ``poly`` containing the origin, if its cycle is ``c``."""
    regions = enumerate_regions(poly, classify=False) if regions is None else regions
    hit = region_containing(regions, ORIGIN)
    return hit if hit is not None and hit.cycle == tuple(c) else None


def realize_cycle(c: Sequence[int], seed: int = 0, budget: Optional[int] = None,
                  radius_jitter: Fraction = Fraction(1, 10000)) -> PolygonSpec:
    """Generic convex polygon whose region around the origin has cycle ``c``."""
    c = tuple(c)
    if not cyc.is_two_standard(c):
        raise cyc.CycleError(f"{cyc.format_cycle(c)} is not two-standard consecutive")
    n = len(c)
    budget = retry_budget() if budget is None else budget
    rng = random.Random(f"realize:{cyc.format_cycle(c, ',')}:{seed}")
    steps = 1000
    for _ in range(budget):
        params = ray_parameters(n, rng)
        if any(p >= q for p, q in zip(params, params[1:])):
            continue
        radii = [1 + radius_jitter * Fraction(rng.randint(-steps, steps), steps) for _ in range(n)]
        verts = block_rule_vertices(c, params, radii)
        if not is_strictly_convex_acw(verts) or not _avoids_origin(verts):
            continue
        poly = PolygonSpec(verts, check=False)
        if not is_generic(poly):
            continue
        if realized_region(poly, c) is None:
            raise RealizationError(c, "region around the origin carries a different cycle")
        return poly
    raise RealizationError(c, f"no valid polygon within {budget} attempts")


@dataclass
class SweepReport:
    n: int
    total: int
    realized: int = 0
    polygons: dict = field(default_factory=dict, repr=False)

    @property
    def ok(self) -> bool:
        return self.realized == self.total


def realization_sweep(n: int, seed: int = 0) -> SweepReport:
    """Realize every two-standard n-cycle; the first failure raises."""
    if not 3 <= n <= 10:
        raise ValueError("realization sweep supports 3 <= n <= 10")
    cycles = cyc.enumerate_two_standard(n)
    report = SweepReport(n, len(cycles))
    for c in cycles:
        report.polygons[c] = realize_cycle(c, seed)
        report.realized += 1
    return report


def near_regular_polygon(n: int, seed: int = 0, jitter: Fraction = Fraction(1, 10 ** 6),
                         budget: Optional[int] = None) -> PolygonSpec:
    """Rational approximation of a regular n-gon, perturbed until its diagonals are generic."""
    budget = retry_budget() if budget is None else budget
    rng = random.Random(f"regular:{n}:{seed}")
    # shifted so that no vertex sits at angle pi, where the parameter blows up
    angles = [-math.pi + math.pi / n + 2 * math.pi * k / n for k in range(n)]
    for _ in range(budget):
        verts = []
        for a in angles:
            t = Fraction(math.tan(a / 2)).limit_denominator(1 << 20)
            r = 1 + jitter * Fraction(rng.randint(-1000, 1000), 1000)
            verts.append(circle_point(t).scale(r))
        if not is_strictly_convex_acw(verts):
            continue
        poly = PolygonSpec(verts, check=False)
        if is_generic(poly):
            return poly
    raise GeometryError(f"no generic near-regular {n}-gon within {budget} attempts")

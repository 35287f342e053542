import math
import random
from fractions import Fraction as F

import pytest

from polyregions.arrangements import (
    IsoKind, PointArrangement, brute_force_isomorphism, canonical_rotation,
    find_isomorphism, is_isomorphism, line_cycle_at, on_hull_boundary,
    orientation_kind, point_cycle, point_cycle_at, point_in_triangle,
    point_in_triangle_via_cycle, random_arrangement, same_point_cycles_pair,
)
from polyregions.exactgeom import GeometryError, Point2, random_generic_polygon

from oracles import hull_oracle

P = Point2.of


def angle_cycle(arr, i, mod):
    # float oracle; fine for small integer coordinates
    a = arr.point(i)
    ang = {j: math.atan2(float(p.y - a.y), float(p.x - a.x)) % mod
           for j in arr.labels() if j != i for p in [arr.point(j)]}
    return canonical_rotation(sorted(ang, key=ang.get))


def test_triangle_line_cycle():
    arr = PointArrangement([P(0, 0), P(4, 1), P(1, 3)])
    for i in arr.labels():
        assert sorted(line_cycle_at(arr, i)) == [j for j in arr.labels() if j != i]


def test_point_cycle_by_angle():
    pts = {1: P(10, 2), 2: P(-1, 9), 3: P(-10, -2)}
    assert point_cycle(P(0, 0), pts) == (1, 2, 3)


@pytest.mark.parametrize("seed", range(10))
def test_cycles_match_atan2(seed):
    arr = random_arrangement(7, random.Random(seed), spread=60)
    for i in arr.labels():
        assert point_cycle_at(arr, i) == angle_cycle(arr, i, 2 * math.pi)
        assert line_cycle_at(arr, i) == angle_cycle(arr, i, math.pi)


@pytest.mark.parametrize("seed", range(5))
def test_interior_point_sees_polygon_in_order(seed):
    poly = random_generic_polygon(7, seed)
    centre = Point2(sum(v.x for v in poly.vertices) / 7, sum(v.y for v in poly.vertices) / 7)
    others = {k: poly.vertex(k) for k in range(1, 8)}
    assert point_cycle(centre, others) == tuple(range(1, 8))


def test_hull_examples():
    quad = PointArrangement([P(0, 0), P(3, 0), P(3, 2), P(0, 2)])
    assert all(on_hull_boundary(quad, i) for i in quad.labels())
    tri = PointArrangement([P(0, 0), P(6, 0), P(0, 6), P(1, 1)])
    assert [on_hull_boundary(tri, i) for i in tri.labels()] == [True, True, True, False]


@pytest.mark.parametrize("seed", range(20))
def test_hull_matches_monotone_chain(seed):
    rng = random.Random(seed)
    arr = random_arrangement(rng.randint(6, 8), rng)
    hull = hull_oracle(arr.points)
    assert {i - 1 for i in arr.labels() if on_hull_boundary(arr, i)} == hull


def test_point_in_triangle_examples():
    a, b, c = P(0, 0), P(6, 0), P(0, 6)
    assert point_in_triangle_via_cycle(P(2, 2), a, b, c)
    assert not point_in_triangle_via_cycle(P(50, 40), a, b, c)
    assert point_in_triangle_via_cycle(P(2, 2), a, c, b)
    with pytest.raises(GeometryError):
        point_in_triangle_via_cycle(P(3, 0), a, b, c)


def test_point_in_triangle_random_agreement():
    rng = random.Random(2024)
    checked = 0
    while checked < 1000:
        pts = [Point2(F(rng.randint(-300, 300), rng.randint(1, 7)), F(rng.randint(-300, 300), rng.randint(1, 7)))
               for _ in range(4)]
        try:
            got = point_in_triangle_via_cycle(*pts)
        except GeometryError:
            continue
        assert got == point_in_triangle(*pts)
        checked += 1


def _affine(m, t):
    (a, b), (c, d) = m
    return lambda p: Point2(a * p.x + b * p.y + t[0], c * p.x + d * p.y + t[1])


@pytest.mark.parametrize("seed", range(5))
def test_cycles_invariant_under_translation_and_scaling(seed):
    arr = random_arrangement(6, random.Random(seed))
    moved = arr.mapped(_affine(((F(7, 2), 0), (0, F(7, 2))), (F(-3), F(11, 5))))
    for i in arr.labels():
        assert line_cycle_at(moved, i) == line_cycle_at(arr, i)
        assert point_cycle_at(moved, i) == point_cycle_at(arr, i)


def test_iso_identity_and_mirror():
    arr = random_arrangement(6, random.Random(5))
    r = find_isomorphism(arr, arr)
    assert r.kind is IsoKind.PRESERVING and r.permutation == {i: i for i in arr.labels()}
    mirror = arr.mapped(lambda p: Point2(-p.x, p.y))
    r = find_isomorphism(arr, mirror, kinds=(IsoKind.REVERSING,))
    assert r.kind is IsoKind.REVERSING
    assert orientation_kind(arr, mirror, r.permutation) is IsoKind.REVERSING


def test_achiral_order_type_admits_both_kinds():
    # this 6-point set is combinatorially equal to its own mirror image
    arr = random_arrangement(6, random.Random(5))
    mirror = arr.mapped(lambda p: Point2(-p.x, p.y))
    r = find_isomorphism(arr, mirror)
    assert r.kind is IsoKind.PRESERVING
    assert orientation_kind(arr, mirror, r.permutation) is IsoKind.PRESERVING
    assert is_isomorphism(arr, mirror, r.permutation)


@pytest.mark.parametrize("seed", range(15))
def test_iso_agrees_with_bruteforce(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 6)
    a1 = random_arrangement(n, rng, spread=20)
    a2 = random_arrangement(n, rng, spread=20) if seed % 3 else a1.relabelled(
        dict(zip(a1.labels(), rng.sample(list(a1.labels()), n))))
    fast, slow = find_isomorphism(a1, a2), brute_force_isomorphism(a1, a2)
    assert bool(fast) == bool(slow)
    if fast:
        assert is_isomorphism(a1, a2, fast.permutation)
        assert orientation_kind(a1, a2, fast.permutation) is fast.kind


def test_iso_size_checks():
    a = random_arrangement(4, random.Random(0))
    with pytest.raises(ValueError):
        find_isomorphism(a, random_arrangement(5, random.Random(0)))
    with pytest.raises(ValueError):
        find_isomorphism(random_arrangement(9, random.Random(0)), random_arrangement(9, random.Random(1)))


def test_same_point_cycles_pair():
    a1, a2 = same_point_cycles_pair(seed=0)
    ident = {i: i for i in a1.labels()}
    assert all(point_cycle_at(a1, i) == point_cycle_at(a2, i) for i in a1.labels())
    assert not is_isomorphism(a1, a2, ident)
    # line cycles see the difference
    line = find_isomorphism(a1, a2)
    assert bool(line) == bool(brute_force_isomorphism(a1, a2))
    assert find_isomorphism(a1, a2, cycles="point").permutation == ident

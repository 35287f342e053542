from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from polyregions import cycles as cyc
from polyregions.cycles import (
    INFINITE, SPECIAL_HEPTAGON_CYCLE, CycleError, Move, Verdict, canonicalize,
    classify, contains_indefinite_pattern, contains_subcycle_ikj, cyclic_relabel_orbit,
    diagonal_distance, enumerate_two_standard, gen_distance_two, is_two_standard,
    orbits, parse_cycle, standard_decomposition, swap_adjacent,
)


def all_cycles(n):
    return [(1,) + p for p in permutations(range(2, n + 1))]


def two_standard_oracle(c):
    # two increasing runs 1..l and l+1..n interleaved, and not the identity
    n = len(c)
    if c == tuple(range(1, n + 1)):
        return False
    for l in range(1, n):
        low = [v for v in c if v <= l]
        high = [v for v in c if v > l]
        if low == sorted(low) and high == sorted(high):
            return True
    return False


def chain_oracle(c):
    """The j-indexed inequality chains, checked literally over all 6-subsets."""
    for idx in combinations(range(len(c)), 6):
        a = [c[p] for p in idx]
        j = a.index(min(a))
        v = lambda t: a[(j + t - 1) % 6]  # a_{i_{j+t}}
        if v(1) < v(4) < v(5) < v(2) < v(3) < v(6):
            return True
        if v(1) < v(2) < v(5) < v(6) < v(3) < v(4):
            return True
    return False


cycle_strategy = st.integers(3, 9).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))))


def test_canonicalize_examples():
    assert canonicalize((3, 6, 1, 4, 5, 2)) == (1, 4, 5, 2, 3, 6)
    assert canonicalize((1, 2, 3)) == (1, 2, 3)
    assert canonicalize((2, 1)) == (1, 2)


@pytest.mark.parametrize("bad", [(1, 1, 2), (0, 1, 2), (1, 2, 4)])
def test_canonicalize_rejects(bad):
    with pytest.raises(CycleError):
        canonicalize(bad)


@given(cycle_strategy, st.integers(0, 8))
def test_canonicalize_rotation_invariant(seq, k):
    k %= len(seq)
    assert canonicalize(seq[k:] + seq[:k]) == canonicalize(seq)


def test_parse_cycle():
    assert parse_cycle("3 6 1 4 5 2") == (1, 4, 5, 2, 3, 6)
    assert parse_cycle("1,4,5,2,3") == (1, 4, 5, 2, 3)
    with pytest.raises(CycleError):
        parse_cycle("1 two 3")


def test_decomposition_examples():
    assert standard_decomposition((1, 2, 3, 4, 5, 6)).rows == ((1, 6),)
    d = standard_decomposition((1, 4, 5, 2, 3))
    assert d.rows == ((1, 3), (4, 5)) and d.i == 2 and d.l == 3
    assert str(d) == "1-3 | 4-5"
    d = standard_decomposition((1, 5, 2, 6, 3, 7, 4))
    assert d.rows == ((1, 4), (5, 7)) and d.l == 4
    assert standard_decomposition((1, 4, 3, 2)).rows == ((1, 2), (3, 3), (4, 4))


@given(cycle_strategy)
def test_decomposition_rows_partition(seq):
    c = canonicalize(seq)
    rows = standard_decomposition(c).rows
    assert rows[0][0] == 1 and rows[-1][1] == len(c)
    assert all(rows[k][1] + 1 == rows[k + 1][0] for k in range(len(rows) - 1))
    pos = {v: k for k, v in enumerate(c)}
    for lo, hi in rows:
        assert [pos[v] for v in range(lo, hi + 1)] == sorted(pos[v] for v in range(lo, hi + 1))


def test_is_two_standard_examples():
    assert not is_two_standard((1, 2, 3, 4))
    assert is_two_standard((1, 4, 5, 2, 3, 6))
    assert not is_two_standard((1, 4, 3, 2))


def test_enumerate_n4():
    assert enumerate_two_standard(4) == [(1, 2, 4, 3), (1, 3, 2, 4), (1, 3, 4, 2), (1, 4, 2, 3)]


@pytest.mark.parametrize("n", range(3, 9))
def test_enumerate_matches_bruteforce_filter(n):
    expected = sorted(c for c in all_cycles(n) if two_standard_oracle(c))
    assert enumerate_two_standard(n) == expected
    assert len(expected) == 2 ** (n - 1) - n
    assert all(is_two_standard(c) == two_standard_oracle(c) for c in all_cycles(n))


def test_diagonal_distance_examples():
    d = diagonal_distance((1, 3, 4, 5, 2, 6))
    assert d.value == 2 and d.witness == (1, 3)
    assert diagonal_distance((1, 4, 5, 2, 3, 6)).value == 3
    assert diagonal_distance(SPECIAL_HEPTAGON_CYCLE).value == 3
    assert diagonal_distance((1, 3, 2)).value == INFINITE


def test_diagonal_distance_rows_only_wraps():
    # only witness is the wrap pair {6,1}, which sits in one row
    c = (1, 2, 3, 7, 4, 5, 6)
    assert diagonal_distance(c).value == 2
    assert diagonal_distance(c, rows_only=True).value > 2


def test_gen_distance_two_counts():
    assert len(gen_distance_two(6)) == 24
    plain = {Move(i, s).apply(6) for i in range(1, 7) for s in range(1, 5)}
    assert len(plain) == 18
    for n in range(6, 11):
        assert len(gen_distance_two(n)) == 2 * n * n - 8 * n


@pytest.mark.parametrize("n", range(4, 10))
def test_gen_distance_two_equals_distance_two(n):
    two = {c for c in enumerate_two_standard(n) if diagonal_distance(c).value == 2}
    assert gen_distance_two(n) == two


def test_move_examples():
    # the n=6 move lists contain (134526) and (132456)
    made = {Move(i, s, w).apply(6) for i in range(1, 7) for s in range(1, 5) for w in (False, True)
            if _safe(Move(i, s, w), 6)}
    assert (1, 3, 4, 5, 2, 6) in made and (1, 3, 2, 4, 5, 6) in made


def _safe(move, n):
    try:
        move.apply(n)
    except CycleError:
        return False
    return True


def test_pattern_examples():
    w = contains_indefinite_pattern((1, 5, 2, 6, 3, 7, 4, 8))
    assert w.positions == (1, 2, 4, 5, 7, 8) and w.pattern == "145236" and w.rotation == 0
    w = contains_indefinite_pattern((1, 5, 2, 6, 3, 7, 8, 4))
    assert w.pattern == "125634"
    assert w.positions == (2, 3, 5, 6, 7, 8) and w.rotation == 1
    assert contains_indefinite_pattern((1, 3, 4, 5, 6, 2)) is None


@pytest.mark.parametrize("n", range(6, 10))
def test_pattern_matches_inequality_chains(n):
    for c in enumerate_two_standard(n):
        assert (contains_indefinite_pattern(c) is not None) == chain_oracle(c), c


def test_classify_examples():
    assert classify((1, 4, 5, 2, 3, 6)).verdict is Verdict.INDEFINITE
    r = classify(SPECIAL_HEPTAGON_CYCLE)
    assert r.definite and r.special and r.evidence() == "special=1526374"
    r = classify((1, 3, 4, 5, 2, 6))
    assert r.definite and r.move is not None and r.move.apply(6) == (1, 3, 4, 5, 2, 6)
    r = classify((1, 2, 5, 6, 3, 4))
    assert r.evidence() == "pattern=125634 positions=1,2,3,4,5,6"
    with pytest.raises(CycleError):
        classify((1, 2, 3, 4))


@pytest.mark.parametrize("n", range(3, 10))
def test_classification_evidence_replays(n):
    for c in enumerate_two_standard(n):
        assert classify(c).validate(c)


def test_small_n_all_definite():
    for n in (3, 4, 5):
        assert all(classify(c).definite for c in enumerate_two_standard(n))


def test_swap_adjacent():
    assert swap_adjacent((1, 4, 5, 2, 3, 6), 2, 5) == (1, 4, 2, 5, 3, 6)
    assert swap_adjacent((1, 2, 3), 1, 2) == (1, 3, 2)
    with pytest.raises(CycleError):
        swap_adjacent((1, 4, 5, 2, 3, 6), 1, 5)


@given(cycle_strategy, st.integers(0, 8))
def test_swap_involution(seq, k):
    c = canonicalize(seq)
    a, b = c[k % len(c)], c[(k + 1) % len(c)]
    assert swap_adjacent(swap_adjacent(c, a, b), a, b) == c


def test_subcycle_ikj():
    assert contains_subcycle_ikj((1, 4, 5, 2, 3, 6), 1, 2, 4)
    assert not any(contains_subcycle_ikj(tuple(range(1, 7)), *t) for t in combinations(range(1, 7), 3))
    assert contains_subcycle_ikj((1, 3, 2), 1, 2, 3)


def test_orbits():
    assert len(cyclic_relabel_orbit((1, 2, 5, 6, 3, 4, 7, 8))) == 8
    assert cyclic_relabel_orbit((1, 2, 3, 4, 5)) == {(1, 2, 3, 4, 5)}
    for n in range(4, 10):
        parts = orbits(enumerate_two_standard(n))
        assert sum(map(len, parts)) == 2 ** (n - 1) - n
        assert all(n % len(o) == 0 for o in parts)


def test_orbits_preserve_classification():
    for n in (6, 7, 8):
        for o in orbits(enumerate_two_standard(n)):
            assert len({classify(c).definite for c in o}) == 1

"""Combinatorics of n-cycles written in cyclic notation starting at 1.

A cycle is a plain tuple ``(1, a_2, ..., a_n)``.  Region labels of a convex
n-gon are exactly the two-standard consecutive cycles: interlacings of the
runs ``1..l`` and ``l+1..n`` other than the identity.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

Cycle = tuple  # tuple[int, ...], canonical rotation starting at 1

INFINITE = float("inf")

PATTERN_145236 = (1, 4, 5, 2, 3, 6)
PATTERN_125634 = (1, 2, 5, 6, 3, 4)
INDEFINITE_PATTERNS = {"145236": PATTERN_145236, "125634": PATTERN_125634}

SPECIAL_HEPTAGON_CYCLE = (1, 5, 2, 6, 3, 7, 4)


class CycleError(ValueError):
    pass


def canonicalize(seq: Iterable[int]) -> Cycle:
    """Rotate a permutation of 1..n so that it starts at 1."""
    seq = tuple(int(v) for v in seq)
    n = len(seq)
    if n == 0 or sorted(seq) != list(range(1, n + 1)):
        raise CycleError(f"not a permutation of 1..{n}: {seq}")
    k = seq.index(1)
    return seq[k:] + seq[:k]


def parse_cycle(text: str) -> Cycle:
    """Parse ``"1 4 5 2 3 6"`` (commas and parentheses tolerated)."""
    cleaned = text.replace(",", " ").replace("(", " ").replace(")", " ")
    try:
        values = [int(tok) for tok in cleaned.split()]
    except ValueError as exc:
        raise CycleError(f"malformed cycle {text!r}: {exc}") from None
    return canonicalize(values)


def format_cycle(c: Sequence[int], sep: str = " ") -> str:
    return sep.join(str(v) for v in c)


def _positions(c: Sequence[int]) -> dict[int, int]:
    return {v: k for k, v in enumerate(c)}


def cyclic_pairs(c: Sequence[int]):
    """Yield cyclically adjacent pairs ``(a_k, a_{k+1})`` including the wrap-around."""
    n = len(c)
    for k in range(n):
        yield c[k], c[(k + 1) % n]


@dataclass(frozen=True)
class StandardDecomposition:
    rows: tuple[tuple[int, int], ...]

    @property
    def i(self) -> int:
        return len(self.rows)

    @property
    def l(self) -> int:
        return self.rows[0][1]

    def row_of(self, value: int) -> int:
        for k, (lo, hi) in enumerate(self.rows):
            if lo <= value <= hi:
                return k
        raise CycleError(f"{value} outside 1..{self.rows[-1][1]}")

    def __str__(self):
        return " | ".join(f"{lo}-{hi}" if lo < hi else str(lo) for lo, hi in self.rows)


def standard_decomposition(c: Sequence[int]) -> StandardDecomposition:
    """Unique consecutive standard structure: k joins the row of k-1 iff it sits to its right."""
    pos = _positions(c)
    rows = []
    start = 1
    for k in range(2, len(c) + 1):
        if pos[k] < pos[k - 1]:
            rows.append((start, k - 1))
            start = k
    rows.append((start, len(c)))
    return StandardDecomposition(tuple(rows))


def is_two_standard(c: Sequence[int]) -> bool:
    return standard_decomposition(c).i == 2


def _require_two_standard(c: Sequence[int]) -> StandardDecomposition:
    dec = standard_decomposition(c)
    if dec.i != 2:
        raise CycleError(f"{format_cycle(c)} is not two-standard consecutive (i={dec.i})")
    return dec


def interlace(l: int, n: int, second_row_slots: Iterable[int]) -> Cycle:
    """Place ``l+1..n`` at the given positions (0-based, never 0) and ``1..l`` elsewhere."""
    slots = set(second_row_slots)
    low, high = iter(range(1, l + 1)), iter(range(l + 1, n + 1))
    return tuple(next(high) if k in slots else next(low) for k in range(n))


@lru_cache(maxsize=None)
def _two_standard(n: int) -> tuple[Cycle, ...]:
    out = []
    for l in range(1, n):
        for slots in combinations(range(1, n), n - l):
            c = interlace(l, n, slots)
            if slots != tuple(range(l, n)):
                out.append(c)
    return tuple(sorted(out))


def enumerate_two_standard(n: int) -> list[Cycle]:
    """All two-standard consecutive n-cycles, lexicographically sorted."""
    if n < 3:
        raise CycleError("n must be at least 3")
    return list(_two_standard(n))


@dataclass(frozen=True)
class DiagonalDistance:
    value: float  # int, or INFINITE when no qualifying pair exists
    witness: Optional[tuple[int, int]] = None

    @property
    def is_finite(self) -> bool:
        return self.value != INFINITE


def qualifying_pairs(c: Sequence[int], rows_only: bool = False) -> list[tuple[int, int]]:
    """Adjacent pairs of a two-standard cycle that could be a diagonal side of its region.

    A pair qualifies when it is not a polygon side and swapping it gives
    another two-standard cycle.  That is the cross-row condition, plus the
    wrap-around pair ``(a_n, 1)`` whose swap re-roots the cycle at 1.  With
    ``rows_only`` the wrap-around exception is dropped.
    """
    dec = _require_two_standard(c)
    n = len(c)
    l = dec.l
    out = set()
    for a, b in cyclic_pairs(c):
        if (a - b) % n in (1, n - 1):
            continue
        if (a <= l) != (b <= l):
            out.add((min(a, b), max(a, b)))
        elif not rows_only and b == 1 and is_two_standard(swap_adjacent(c, a, b)):
            out.add((1, a))
    return sorted(out)


def _cyclic_gap(a: int, b: int, n: int) -> int:
    return min((a - b) % n, (b - a) % n)


def diagonal_distance(c: Sequence[int], rows_only: bool = False) -> DiagonalDistance:
    n = len(c)
    pairs = qualifying_pairs(c, rows_only)
    if not pairs:
        return DiagonalDistance(INFINITE)
    best = min(pairs, key=lambda p: (_cyclic_gap(p[0], p[1], n), p))
    return DiagonalDistance(_cyclic_gap(best[0], best[1], n), best)


@dataclass(frozen=True)
class Move:
    """Move label ``i`` forward ``steps`` places on ``(1 2 ... n)``, optionally swapping its old neighbours."""

    i: int
    steps: int
    swapped: bool = False

    def apply(self, n: int) -> Cycle:
        ring = [v for v in range(1, n + 1) if v != self.i]
        # ring starts at i+1 so that slot k means "after the k-th successor of i"
        k0 = ring.index(self.i % n + 1)
        ring = ring[k0:] + ring[:k0]
        ring.insert(self.steps, self.i)
        if self.swapped:
            prev, nxt = (self.i - 2) % n + 1, self.i % n + 1
            a, b = ring.index(prev), ring.index(nxt)
            if (a - b) % len(ring) not in (1, len(ring) - 1):
                raise CycleError(f"{prev},{nxt} not adjacent after {self}")
            ring[a], ring[b] = ring[b], ring[a]
        return canonicalize(ring)

    def __str__(self):
        return f"i:{self.i},steps:{self.steps},swap:{'yes' if self.swapped else 'no'}"


def distance_two_moves(n: int):
    """Yield every move of the distance-two construction (with repeats across moves)."""
    for i in range(1, n + 1):
        for steps in range(1, n - 1):
            yield Move(i, steps)
            yield Move(i, steps, swapped=True)


@lru_cache(maxsize=None)
def _move_table(n: int) -> dict[Cycle, Move]:
    table: dict[Cycle, Move] = {}
    for move in distance_two_moves(n):
        table.setdefault(move.apply(n), move)
    return table


def gen_distance_two(n: int) -> set[Cycle]:
    """Cycles reachable from ``(1 2 ... n)`` by one forward move, optionally followed by the neighbour swap."""
    if n < 4:
        raise CycleError("n must be at least 4")
    return set(_move_table(n))


def move_derivation(c: Sequence[int]) -> Optional[Move]:
    return _move_table(len(c)).get(tuple(c))


def _rank_rotation(values: Sequence[int]) -> tuple[int, ...]:
    order = sorted(values)
    ranks = [order.index(v) + 1 for v in values]
    k = ranks.index(1)
    return tuple(ranks[k:] + ranks[:k])


@dataclass(frozen=True)
class PatternWitness:
    positions: tuple[int, ...]  # 1-based positions i_1 < ... < i_6
    pattern: str
    rotation: int  # j: offset of the minimum among the six positions

    def values(self, c: Sequence[int]) -> tuple[int, ...]:
        return tuple(c[p - 1] for p in self.positions)


def pattern_at(c: Sequence[int], positions: Sequence[int]) -> Optional[PatternWitness]:
    """Check whether the entries at six 1-based positions form an indefinite pattern."""
    vals = [c[p - 1] for p in positions]
    key = _rank_rotation(vals)
    for name, pattern in INDEFINITE_PATTERNS.items():
        if key == pattern:
            return PatternWitness(tuple(positions), name, vals.index(min(vals)))
    return None


def contains_indefinite_pattern(c: Sequence[int]) -> Optional[PatternWitness]:
    """Lexicographically first six positions carrying a (145236) or (125634) pattern."""
    _require_two_standard(c)
    for positions in combinations(range(1, len(c) + 1), 6):
        hit = pattern_at(c, positions)
        if hit is not None:
            return hit
    return None


class Verdict(enum.Enum):
    DEFINITE = "definite"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    move: Optional[Move] = None
    special: bool = False
    witness: Optional[PatternWitness] = None
    note: str = field(default="", compare=False)

    @property
    def definite(self) -> bool:
        return self.verdict is Verdict.DEFINITE

    def evidence(self) -> str:
        if self.witness is not None:
            pos = ",".join(map(str, self.witness.positions))
            return f"pattern={self.witness.pattern} positions={pos}"
        if self.move is not None:
            return f"move={self.move}"
        if self.special:
            return "special=1526374"
        return self.note

    def validate(self, c: Sequence[int]) -> bool:
        """Replay the evidence against ``c``."""
        c = tuple(c)
        if self.witness is not None:
            return pattern_at(c, self.witness.positions) == self.witness
        if self.move is not None:
            return self.move.apply(len(c)) == c
        if self.special:
            return c == SPECIAL_HEPTAGON_CYCLE
        return len(c) < 6 and contains_indefinite_pattern(c) is None


def classify(c: Sequence[int]) -> Classification:
    """Definite iff no six-point indefinite pattern occurs."""
    c = tuple(c)
    _require_two_standard(c)
    n = len(c)
    witness = contains_indefinite_pattern(c)
    if witness is not None:
        return Classification(Verdict.INDEFINITE, witness=witness)
    move = move_derivation(c) if n >= 4 else None
    special = c == SPECIAL_HEPTAGON_CYCLE
    if move is None and not special and n >= 6:
        raise AssertionError(f"pattern-free cycle {format_cycle(c)} has no move derivation")
    note = "" if (move or special) else f"n={n}: every region is definite"
    return Classification(Verdict.DEFINITE, move=move, special=special, note=note)


def swap_adjacent(c: Sequence[int], i: int, j: int) -> Cycle:
    """Transpose two cyclically adjacent labels."""
    c = list(c)
    n = len(c)
    a, b = c.index(i), c.index(j)
    if (a - b) % n not in (1, n - 1):
        raise CycleError(f"{i} and {j} are not adjacent in {format_cycle(c)}")
    c[a], c[b] = c[b], c[a]
    return canonicalize(c)


def contains_subcycle_ikj(c: Sequence[int], i: int, j: int, k: int) -> bool:
    """True iff i, k, j (for i < j < k) appear in this cyclic order."""
    if not i < j < k:
        raise CycleError("expected i < j < k")
    pos = _positions(c)
    a, b, d = pos[i], pos[k], pos[j]
    return a < b < d or b < d < a or d < a < b


def relabel_shift(c: Sequence[int], times: int = 1) -> Cycle:
    n = len(c)
    return canonicalize((v - 1 + times) % n + 1 for v in c)


def cyclic_relabel_orbit(c: Sequence[int]) -> set[Cycle]:
    return {relabel_shift(c, t) for t in range(len(c))}


def orbits(cycles: Iterable[Cycle]) -> list[frozenset]:
    """Partition a relabel-closed set of cycles into orbits, ordered by smallest member."""
    remaining = set(cycles)
    out = []
    for c in sorted(remaining):
        if c in remaining:
            orb = frozenset(cyclic_relabel_orbit(c))
            remaining -= orb
            out.append(orb)
    return out

"""Verification campaigns tying the cycle combinatorics to actual polygons.

Sampling can only falsify: a definite cycle missing from one polygon is a hard
failure, while an indefinite cycle needs one polygon without it and one
polygon (sampled or constructed) with it.
"""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import cycles as cyc
from . import tables
from .exactgeom import random_generic_polygon
from .realize import near_regular_polygon, realize_cycle, realized_region
from .regions import build_arrangement, region_count_formula, regions_of

log = logging.getLogger(__name__)


def trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


@dataclass
class ValidationReport:
    n: int
    trials: int = 0
    formula_count: int = 0
    census_count: int = 0
    definite_count: int = 0
    indefinite_count: int = 0
    distance_two_count: int = 0
    occurrences: dict = field(default_factory=dict)  # cycle -> polygons containing it
    absence_witness: dict = field(default_factory=dict)  # cycle -> trial index
    presence_witness: dict = field(default_factory=dict)  # cycle -> "trial k" / "realized"
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def occurrence_fraction(self, c) -> float:
        return self.occurrences.get(tuple(c), 0) / self.trials if self.trials else 0.0

    def summary_line(self) -> str:
        return (f"cycles={self.census_count} regions={self.formula_count} "
                f"definite={self.definite_count} indefinite={self.indefinite_count}")

    def to_dict(self) -> dict:
        d = asdict(self)
        fmt = cyc.format_cycle
        d["occurrences"] = {fmt(c): k for c, k in sorted(self.occurrences.items())}
        d["absence_witness"] = {fmt(c): k for c, k in sorted(self.absence_witness.items())}
        d["presence_witness"] = {fmt(c): k for c, k in sorted(self.presence_witness.items())}
        d["ok"] = self.ok
        return d

    def table(self) -> str:
        lines = [f"n={self.n} trials={self.trials}", self.summary_line()]
        if self.trials:
            lines.append(f"{'cycle':<24}{'class':<12}{'present':>8}")
            for c in sorted(self.occurrences, key=lambda c: (-self.occurrences[c], c)):
                verdict = "definite" if cyc.classify(c).definite else "indefinite"
                lines.append(f"{cyc.format_cycle(c):<24}{verdict:<12}{self.occurrences[c]:>8}")
        lines.append("violations: " + ("none" if self.ok else str(len(self.violations))))
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)


def census_report(n: int) -> ValidationReport:
    if not 3 <= n <= 14:
        raise ValueError("census supports 3 <= n <= 14")
    cycles = cyc.enumerate_two_standard(n)
    definite = [c for c in cycles if cyc.classify(c).definite]
    report = ValidationReport(n, formula_count=region_count_formula(n), census_count=len(cycles),
                              definite_count=len(definite),
                              indefinite_count=len(cycles) - len(definite))
    if n >= 4:
        report.distance_two_count = len(cyc.gen_distance_two(n))
    if report.census_count != 2 ** (n - 1) - n:
        report.violations.append(f"census {report.census_count} != 2^(n-1)-n")
    if n >= 6:
        expected = report.distance_two_count + (1 if n == 7 else 0)
        if report.definite_count != expected:
            report.violations.append(f"definite {report.definite_count} != {expected}")
    return report


def _trial_cycles(args):
    n, s = args
    poly = random_generic_polygon(n, s)
    regions = regions_of(build_arrangement(poly), classify=False)
    return len(regions), frozenset(r.cycle for r in regions)


def sample_occurrences(n: int, trials: int, seed: int, workers: int = 1) -> list:
    """(region count, occurring cycle set) per trial, in trial order."""
    jobs = [(n, trial_seed(seed, t)) for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_trial_cycles, jobs))
    return [_trial_cycles(j) for j in jobs]


def empirical_validate(n: int, trials: int, seed: int = 0, workers: int = 1,
                       realize_missing: bool = True) -> ValidationReport:
    if not 4 <= n <= 9:
        raise ValueError("empirical validation supports 4 <= n <= 9")
    if trials < 1:
        raise ValueError("trials must be positive")
    report = census_report(n)
    report.trials = trials
    cycles = cyc.enumerate_two_standard(n)
    definite = {c for c in cycles if cyc.classify(c).definite}
    counts: Counter = Counter()
    formula = report.formula_count
    for t, (count, occ) in enumerate(sample_occurrences(n, trials, seed, workers)):
        if count != formula or len(occ) != formula:
            report.violations.append(f"trial {t}: {count} regions, {len(occ)} distinct cycles, expected {formula}")
        for c in sorted(definite - occ):
            report.violations.append(f"trial {t}: definite cycle {cyc.format_cycle(c)} missing")
        for c in cycles:
            if c in occ:
                counts[c] += 1
                report.presence_witness.setdefault(c, f"trial {t}")
            else:
                report.absence_witness.setdefault(c, t)
    report.occurrences = {c: counts[c] for c in cycles}
    for c in sorted(set(cycles) - definite):
        if c not in report.absence_witness:
            report.violations.append(f"indefinite cycle {cyc.format_cycle(c)} present in every trial")
        if realize_missing:
            poly = realize_cycle(c, seed)
            if realized_region(poly, c) is None:
                report.violations.append(f"indefinite cycle {cyc.format_cycle(c)} not realized")
            elif c not in report.presence_witness:
                report.presence_witness[c] = "realized"
    return report


@dataclass
class ExclusivityResult:
    n: int
    trials: int
    pairs: list
    violations: list = field(default_factory=list)
    presence: Counter = field(default_factory=Counter)

    def __bool__(self):
        return not self.violations


def exclusivity_check(n: int, trials: int, seed: int = 0, workers: int = 1) -> ExclusivityResult:
    """No exclusive pair is co-present; for n = 7 exactly one member of each pair is."""
    pairs = tables.exclusive_pairs(n)
    result = ExclusivityResult(n, trials, pairs)
    for a, b in pairs:
        for c in (a, b):
            if cyc.classify(c).definite:
                result.violations.append(f"table cycle {cyc.format_cycle(c)} is not indefinite")
    for t, (_, occ) in enumerate(sample_occurrences(n, trials, seed, workers)):
        for a, b in pairs:
            both, neither = a in occ and b in occ, a not in occ and b not in occ
            result.presence.update(c for c in (a, b) if c in occ)
            if both:
                result.violations.append(f"trial {t} (seed {trial_seed(seed, t)}): "
                                         f"{cyc.format_cycle(a)} and {cyc.format_cycle(b)} co-present")
            if neither and n == 7:
                result.violations.append(f"trial {t}: neither {cyc.format_cycle(a)} nor {cyc.format_cycle(b)}")
    return result


@dataclass
class OrbitAudit:
    orbit_sizes: list
    distance_two_orbits: int
    indefinite_orbits: int
    listed_matches: list  # per listed orbit: index of the computed orbit it equals, or None
    violations: list = field(default_factory=list)

    def __bool__(self):
        return not self.violations


def orbit_audit(n: int = 8) -> OrbitAudit:
    if n != 8:
        raise ValueError("orbit audit is defined for n = 8")
    computed = cyc.orbits(cyc.enumerate_two_standard(8))
    d2 = cyc.gen_distance_two(8)
    kinds = []
    for orb in computed:
        if orb <= d2:
            kinds.append("distance-two")
        elif all(not cyc.classify(c).definite for c in orb):
            kinds.append("indefinite")
        else:
            kinds.append("mixed")
    matches = []
    audit = OrbitAudit([len(o) for o in computed], kinds.count("distance-two"),
                       kinds.count("indefinite"), matches)
    for k, listed in enumerate(tables.orbit_lists_8()):
        hit = next((m for m, orb in enumerate(computed) if orb == frozenset(listed)), None)
        matches.append(hit)
        want = "distance-two" if k < tables.DISTANCE_TWO_ORBITS_8 else "indefinite"
        if hit is None:
            audit.violations.append(f"listed orbit {k + 1} is not a computed orbit")
        elif kinds[hit] != want:
            audit.violations.append(f"listed orbit {k + 1} is {kinds[hit]}, expected {want}")
    if len(computed) != 15 or any(len(o) != 8 for o in computed):
        audit.violations.append(f"orbit sizes {audit.orbit_sizes}")
    if (audit.distance_two_orbits, audit.indefinite_orbits) != (8, 7):
        audit.violations.append(f"{audit.distance_two_orbits} distance-two / {audit.indefinite_orbits} indefinite orbits")
    if len({m for m in matches if m is not None}) != 15:
        audit.violations.append("listed orbits do not hit 15 distinct computed orbits")
    return audit


def _witness_middles(c, m: int) -> set:
    """Labels i such that {i-1, i+1} (mod m) is a qualifying adjacent pair of ``c``."""
    mids = set()
    for a, b in cyc.qualifying_pairs(c):
        if (b - a) % m == 2:
            mids.add(a % m + 1)
        elif (a - b) % m == 2:
            mids.add(b % m + 1)
    return mids


def exceptional_shapes(n: int) -> dict:
    """The n-cycles obtained by putting n between an excluded witness pair, grouped by shape."""
    r = lambda a, b: tuple(range(a, b + 1))
    return {
        2: {(1, n - 1) + r(2, n - 2) + (n,)},
        3: {r(1, j) + (n - 1,) + r(j + 1, n - 2) + (n,) for j in range(2, n - 2)},
        4: {(1,) + r(j, n) + r(2, j - 1) for j in range(4, n - 1)},
        5: {(1, n - 1, n) + r(2, n - 2)},
        6: {(1,) + r(3, n) + (2,)},
        7: {r(1, n - 4) + (n - 1, n, n - 3, n - 2)},
        8: {r(1, j) + (n - 2,) + r(j + 1, n - 4) + (n - 1, n, n - 3) for j in range(1, n - 3)},
    }


def exceptional_shape_of(d, n: int) -> Optional[int]:
    if d[-2:] == (3, n):
        return 1
    for k, shapes in exceptional_shapes(n).items():
        if tuple(d) in shapes:
            return k
    return None


@dataclass
class ExtensionAudit:
    n: int
    base_cycles: int = 0
    extensions_checked: int = 0
    adjacency_kept: int = 0
    separating: int = 0
    counterexamples: list = field(default_factory=list)
    unexplained_separations: list = field(default_factory=list)
    excluded_failures: int = 0  # non-distance-two extensions of cycles with only excluded witnesses

    def __bool__(self):
        return not self.counterexamples and not self.unexplained_separations


def extension_audit(n: int) -> ExtensionAudit:
    """Exhaustively extend distance-two (n-1)-cycles by the label n.

    For a cycle with a witness pair {i-1, i+1} whose middle i avoids
    {1, 2, n-2, n-1}, every two-standard extension must have distance two.
    Extensions that separate a witness pair must belong to one of the
    exceptional shapes and come from an excluded middle.
    """
    if n < 7:
        raise ValueError("extension audit needs n >= 7")
    m = n - 1
    excluded = {1, 2, m - 1, m}
    audit = ExtensionAudit(n)
    for c in cyc.enumerate_two_standard(m):
        if cyc.diagonal_distance(c).value != 2:
            continue
        mids = _witness_middles(c, m)
        good = mids - excluded
        audit.base_cycles += bool(good)
        for k in range(1, n):
            d = c[:k] + (n,) + c[k:]
            if not cyc.is_two_standard(d):
                continue
            dist = cyc.diagonal_distance(d).value
            for i in mids:
                lo, hi = sorted((c.index((i - 2) % m + 1), c.index(i % m + 1)))
                if (hi - lo == 1 and k == hi) or (hi - lo == m - 1 and k == m):
                    audit.separating += 1
                    if i not in excluded or exceptional_shape_of(d, n) is None:
                        audit.unexplained_separations.append((c, d, i))
            if good:
                audit.extensions_checked += 1
                kept = any(_adjacent(d, (i - 2) % m + 1, i % m + 1) for i in good)
                audit.adjacency_kept += kept
                if dist != 2:
                    audit.counterexamples.append((c, d))
            elif mids and dist != 2:
                audit.excluded_failures += 1
    return audit


def _adjacent(c, a, b) -> bool:
    n = len(c)
    return (c.index(a) - c.index(b)) % n in (1, n - 1)


def side_count_survey(c=cyc.SPECIAL_HEPTAGON_CYCLE, seeds=range(20),
                      near_regular: bool = True) -> dict:
    """Side counts of the region with cycle ``c`` across constructed polygons.

    Returns ``{sides: polygon}`` keeping the first polygon seen per side count.
    """
    found = {}
    polys = [near_regular_polygon(len(c))] if near_regular else []
    polys += [realize_cycle(c, s) for s in seeds]
    for poly in polys:
        for r in regions_of(build_arrangement(poly), classify=False):
            if r.cycle == tuple(c):
                found.setdefault(r.side_count, poly)
    return found

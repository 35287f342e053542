"""Command line entry point: ``polyregions <command> ...``.

Exit codes: 0 success, 2 bad input, 3 non-generic polygon, 4 validation violation.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import cycles as cyc
from . import formats
from .arrangements import find_isomorphism
from .exactgeom import GeometryError, is_generic, random_generic_polygon
from .harness import census_report, empirical_validate
from .realize import RealizationError, realize_cycle, realized_region
from .regions import build_arrangement, regions_of

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_NON_GENERIC = 3
EXIT_VIOLATION = 4

log = logging.getLogger("polyregions")


class CliError(Exception):
    def __init__(self, message, code=EXIT_BAD_INPUT):
        super().__init__(message)
        self.code = code


def _cycle_arg(text: str):
    try:
        return cyc.parse_cycle(text)
    except cyc.CycleError as exc:
        raise CliError(str(exc)) from None


def _two_standard_arg(text: str):
    c = _cycle_arg(text)
    if not cyc.is_two_standard(c):
        raise CliError(f"{cyc.format_cycle(c)} is not a two-standard consecutive cycle")
    return c


def _write(path: str, text: str):
    with open(path, "w") as fh:
        fh.write(text)


def cmd_census(args) -> int:
    if not 3 <= args.n <= 14:
        raise CliError("--n must be between 3 and 14")
    report = census_report(args.n)
    if args.json:
        d = report.to_dict()
        for key in ("trials", "occurrences", "absence_witness", "presence_witness"):
            d.pop(key)
        print(formats.dump_json(d))
    else:
        print(report.summary_line())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_classify(args) -> int:
    c = _two_standard_arg(args.cycle)
    result = cyc.classify(c)
    if args.json:
        dist = cyc.diagonal_distance(c)
        print(formats.dump_json({
            "cycle": cyc.format_cycle(c),
            "classification": result.verdict.value,
            "evidence": result.evidence(),
            "diagonal_distance": dist.value if dist.is_finite else "infinite",
        }))
    else:
        print(f"{result.verdict.value} {result.evidence()}".rstrip())
    return EXIT_OK


def cmd_decompose(args) -> int:
    c = _cycle_arg(args.cycle)
    print(f"rows: {cyc.standard_decomposition(c)}")
    return EXIT_OK


def _polygon_from_args(args):
    if args.polygon:
        try:
            poly = formats.polygon_from_dict(formats.load_json(args.polygon), args.polygon)
        except formats.FormatError as exc:
            raise CliError(str(exc)) from None
        if not is_generic(poly):
            raise CliError(f"{args.polygon}: polygon diagonals are not generic", EXIT_NON_GENERIC)
        return poly
    if args.n is None:
        raise CliError("--random needs --n")
    if args.n < 3:
        raise CliError("--n must be at least 3")
    return random_generic_polygon(args.n, args.seed)


def cmd_regions(args) -> int:
    poly = _polygon_from_args(args)
    try:
        regions = regions_of(build_arrangement(poly))
    except GeometryError as exc:
        raise CliError(str(exc), EXIT_NON_GENERIC) from None
    if args.svg:
        _write(args.svg, formats.render_svg(poly, regions, labels=args.labels))
    if args.json:
        print(formats.dump_json(formats.region_report(poly, regions)))
    else:
        print(f"n={poly.n} regions={len(regions)}")
        for r in sorted(regions, key=lambda r: r.cycle):
            print(f"{cyc.format_cycle(r.cycle):<{3 * poly.n}} {r.classification.verdict.value:<10} sides={r.side_count}")
    return EXIT_OK


def cmd_realize(args) -> int:
    c = _two_standard_arg(args.cycle)
    try:
        poly = realize_cycle(c, args.seed)
    except RealizationError as exc:
        raise CliError(str(exc), EXIT_VIOLATION) from None
    regions = regions_of(build_arrangement(poly))
    hit = realized_region(poly, c, regions)
    text = formats.dump_json(formats.polygon_to_dict(poly))
    line = f"verified: region containing the origin has cycle {cyc.format_cycle(hit.cycle)} sides={hit.side_count}"
    if args.svg:
        _write(args.svg, formats.render_svg(poly, regions, highlight=c))
    if args.out:
        _write(args.out, text + "\n")
        print(line)
    else:
        print(text)
        print(line, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not 4 <= args.n <= 9:
        raise CliError("--n must be between 4 and 9")
    if args.trials < 1:
        raise CliError("--trials must be positive")
    report = empirical_validate(args.n, args.trials, args.seed, workers=args.workers)
    if args.json:
        print(formats.dump_json(report.to_dict()))
    else:
        print(report.table())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_iso(args) -> int:
    try:
        a1 = formats.arrangement_from_dict(formats.load_json(args.a), args.a)
        a2 = formats.arrangement_from_dict(formats.load_json(args.b), args.b)
        result = find_isomorphism(a1, a2, bound=args.bound)
    except (formats.FormatError, ValueError) as exc:
        raise CliError(str(exc)) from None
    if result.permutation:
        mapping = ",".join(f"{i}->{j}" for i, j in sorted(result.permutation.items()))
        print(f"{result.kind.value} pi={mapping}")
    else:
        print(result.kind.value)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyregions",
                                     description="Regions of convex polygons cut by their diagonals.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="count two-standard cycles and their classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("classify", help="definite/indefinite verdict with evidence")
    p.add_argument("--cycle", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="consecutive standard decomposition of a cycle")
    p.add_argument("--cycle", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("regions", help="enumerate the regions of a polygon")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--random", action="store_true")
    src.add_argument("--polygon", metavar="FILE")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--svg", metavar="OUT")
    p.add_argument("--labels", action="store_true", help="write cycle labels into the SVG")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("realize", help="build a polygon containing a region with the given cycle")
    p.add_argument("--cycle", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--svg", metavar="OUT")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", help="empirical definite/indefinite validation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("iso", help="isomorphism test for two point arrangements")
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--b", required=True, metavar="FILE")
    p.add_argument("--bound", type=int, default=8)
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"polyregions {args.command}: error: {exc}", file=sys.stderr)
        return exc.code
    except GeometryError as exc:
        print(f"polyregions {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())

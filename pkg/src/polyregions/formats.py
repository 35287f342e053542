"""Serialization: polygon / arrangement JSON, region reports and SVG drawings.

A rational coordinate pair is written as four decimal strings
``[x_num, x_den, y_num, y_den]`` in lowest terms.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Sequence

from . import cycles as cyc
from .arrangements import PointArrangement
from .exactgeom import GeometryError, Point2, PolygonSpec


class FormatError(ValueError):
    pass


def encode_point(p: Point2) -> list[str]:
    return [str(p.x.numerator), str(p.x.denominator), str(p.y.numerator), str(p.y.denominator)]


def decode_point(item, where: str) -> Point2:
    if not isinstance(item, list) or len(item) != 4:
        raise FormatError(f"{where}: expected [x_num, x_den, y_num, y_den]")
    try:
        xn, xd, yn, yd = (int(str(v)) for v in item)
    except ValueError:
        raise FormatError(f"{where}: entries must be decimal integer strings") from None
    if xd <= 0 or yd <= 0:
        raise FormatError(f"{where}: denominators must be positive")
    return Point2(Fraction(xn, xd), Fraction(yn, yd))


def polygon_to_dict(poly: PolygonSpec) -> dict:
    return {"n": poly.n, "vertices": [encode_point(v) for v in poly.vertices]}


def _points_from_dict(data, what: str) -> list[Point2]:
    if not isinstance(data, dict) or "vertices" not in data:
        raise FormatError(f"{what}: expected an object with a 'vertices' list")
    verts = data["vertices"]
    if not isinstance(verts, list):
        raise FormatError(f"{what}: 'vertices' must be a list")
    pts = [decode_point(v, f"{what}: vertices[{k}]") for k, v in enumerate(verts)]
    if "n" in data and data["n"] != len(pts):
        raise FormatError(f"{what}: n={data['n']} but {len(pts)} vertices given")
    return pts


def polygon_from_dict(data, what: str = "polygon") -> PolygonSpec:
    pts = _points_from_dict(data, what)
    try:
        return PolygonSpec(pts)
    except GeometryError as exc:
        raise FormatError(f"{what}: {exc}") from None


def arrangement_from_dict(data, what: str = "arrangement") -> PointArrangement:
    pts = _points_from_dict(data, what)
    try:
        return PointArrangement(pts)
    except GeometryError as exc:
        raise FormatError(f"{what}: {exc}") from None


def load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def dump_json(data) -> str:
    return json.dumps(data, indent=2)


def region_report(poly: PolygonSpec, regions) -> dict:
    """Region report; it embeds the polygon so it can be fed back as ``--polygon`` input."""
    rows = []
    for r in sorted(regions, key=lambda r: r.cycle):
        rows.append({
            "cycle": cyc.format_cycle(r.cycle),
            "classification": r.classification.verdict.value if r.classification else None,
            "sides": r.side_count,
            "representative": encode_point(r.representative),
        })
    out = polygon_to_dict(poly)
    out.update({"region_count": len(rows), "regions": rows})
    return out


def decimal_string(v: Fraction, places: int = 8) -> str:
    """Round a rational to ``places`` decimals and print it without going through floats."""
    scaled = round(v * 10 ** places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** places)
    return f"{sign}{whole}.{frac:0{places}d}"


DEFINITE_FILL = "#9ecae1"
INDEFINITE_FILL = "#fdae6b"
HIGHLIGHT_FILL = "#e6550d"


def render_svg(poly: PolygonSpec, regions=(), labels: bool = False,
               highlight: Optional[Sequence[int]] = None, size: int = 1000) -> str:
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or Fraction(1)
    margin = Fraction(size, 20)
    scale = (size - 2 * margin) / span

    def xy(p: Point2) -> str:
        x = margin + (p.x - min(xs)) * scale
        y = size - margin - (p.y - min(ys)) * scale
        return f"{decimal_string(x)},{decimal_string(y)}"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" '
           f'width="{size}" height="{size}">']
    for r in regions:
        if highlight is not None and r.cycle == tuple(highlight):
            fill = HIGHLIGHT_FILL
        elif r.classification is not None and not r.classification.definite:
            fill = INDEFINITE_FILL
        else:
            fill = DEFINITE_FILL
        pts = " ".join(xy(p) for p in r.boundary)
        out.append(f'  <polygon points="{pts}" fill="{fill}" stroke="none">'
                   f'<title>{cyc.format_cycle(r.cycle)}</title></polygon>')
    for c in poly.chords():
        a, b = poly.segment(c)
        (x1, y1), (x2, y2) = xy(a).split(","), xy(b).split(",")
        width = 2 if c.is_side(poly.n) else 1
        out.append(f'  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="{width}"/>')
    for k, v in enumerate(poly.vertices, 1):
        x, y = xy(v).split(",")
        out.append(f'  <text x="{x}" y="{y}" font-size="24" fill="black">P{k}</text>')
    if labels:
        for r in regions:
            x, y = xy(r.representative).split(",")
            out.append(f'  <text x="{x}" y="{y}" font-size="9" text-anchor="middle">'
                       f'{cyc.format_cycle(r.cycle, "")}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

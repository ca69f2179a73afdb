"""Deterministic SVG rendering of spaces and loops.

Scenes are built from exact rational geometry and serialized with a fixed
decimal rounding (round-half-even, documented in the file header), fixed
element order and fixed styling, so identical inputs produce byte-identical
files. The model's y axis points up; emitted coordinates are y-negated so
the picture is upright in SVG's y-down convention.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .exactnum import rational_decimal
from .geometry import Segment
from .loops import Loop
from .spaces import SpaceHandle

_STYLE = (
    ".circle{stroke:#555;stroke-width:0.004;fill:none}"
    ".alpha{stroke:#c22;stroke-width:0.006;fill:none}"
    ".loop{fill:none;stroke-width:0.008}"
    ".loop-0{stroke:#06c}.loop-1{stroke:#090}.loop-2{stroke:#c60}"
    ".loop-3{stroke:#909}.loop-4{stroke:#066}"
)


def _dec(value: Fraction, digits: int) -> str:
    return rational_decimal(value, digits)


def _space_segments(space: SpaceHandle, upto: Optional[int]) -> Tuple[Tuple[str, Segment], ...]:
    upto = upto if upto is not None else space.hint
    out = []
    for n in range(2, upto + 1):
        for e in space.circle(n).edges:
            out.append(("circle", e))
    if space.has_alpha:
        out.append(("alpha", space.alpha_segment))
    return tuple(out)


def render_scene(
    spaces: Sequence[Tuple[SpaceHandle, Optional[int]]] = (),
    loops: Sequence[Loop] = (),
    digits: int = 6,
) -> str:
    """SVG text for the given spaces (with circle cutoffs) and loops."""
    lines = []
    points: list = []
    for space, upto in spaces:
        for cls, seg in _space_segments(space, upto):
            points.extend((seg.a, seg.b))
            lines.append(
                f'<line class="{cls}" x1="{_dec(seg.a.x, digits)}" y1="{_dec(-seg.a.y, digits)}" '
                f'x2="{_dec(seg.b.x, digits)}" y2="{_dec(-seg.b.y, digits)}"/>'
            )
    for i, loop in enumerate(loops):
        pts = loop.path.points
        points.extend(pts)
        coords = " ".join(f"{_dec(q.x, digits)},{_dec(-q.y, digits)}" for q in pts)
        lines.append(f'<polyline class="loop loop-{i % 5}" points="{coords}"/>')
    if points:
        xs = [q.x for q in points]
        ys = [-q.y for q in points]
        pad = Fraction(1, 10)
        min_x, max_x = min(xs) - pad, max(xs) + pad
        min_y, max_y = min(ys) - pad, max(ys) + pad
        viewbox = (
            f"{_dec(min_x, digits)} {_dec(min_y, digits)} "
            f"{_dec(max_x - min_x, digits)} {_dec(max_y - min_y, digits)}"
        )
    else:
        viewbox = "0 0 1 1"
    body = "\n".join(f"  {ln}" for ln in lines)
    doc = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f"<!-- pi1lab scene; coordinates rounded half-even to {digits} decimal places; "
        "model y axis negated for display -->\n"
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{viewbox}" width="640" height="640">\n'
        f"  <style>{_STYLE}</style>\n"
    )
    if body:
        doc += body + "\n"
    return doc + "</svg>\n"


def write_scene(
    path: str,
    spaces: Sequence[Tuple[SpaceHandle, Optional[int]]] = (),
    loops: Sequence[Loop] = (),
    digits: int = 6,
) -> str:
    text = render_scene(spaces, loops, digits)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text

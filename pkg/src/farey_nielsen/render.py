"""SVG pictures of the Farey graph in the upper half plane, with 1-orbits highlighted."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import floor, ceil
from typing import List, Optional, Sequence, Set, Tuple

from .errors import DepthOverflow, RangeEmpty
from .exact import INFINITY, FareyVertex, Mat2, vertex
from .orbits import act, one_orbit_representatives

DEFAULT_MAX_DEPTH = 12
ORBIT_COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd")

# The three pictures of the orbits of the standard forms, as CLI argument lists.
FIGURES = {
    "reversing": ("0,1;1,1", "-2:2"),
    "two-orbits": ("0,-1;1,3", "-4:1"),
    "unique-geodesic": ("0,-1;1,4", "-4:1"),
}


def max_depth() -> int:
    raw = os.environ.get("FAREY_NIELSEN_MAX_DEPTH")
    return int(raw) if raw else DEFAULT_MAX_DEPTH


@dataclass(frozen=True)
class RenderSpec:
    x_min: Fraction
    x_max: Fraction
    depth: int = 6
    highlighted_orbits: Tuple[Tuple[FareyVertex, str], ...] = ()
    width: int = 960
    height: int = 480
    label_height: int = 1

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise RangeEmpty(f"empty range [{self.x_min}, {self.x_max}]")
        if self.depth < 0 or self.depth > max_depth():
            raise DepthOverflow(f"depth {self.depth} outside 0..{max_depth()}")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("image size must be positive")


def parse_range(text: str) -> Tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"range {text!r} is not of the form a:b")
    return Fraction(lo), Fraction(hi)


def _frac(v: FareyVertex) -> Fraction:
    return Fraction(v.p, v.q)


def _in_range(v: FareyVertex, spec: RenderSpec) -> bool:
    return v.is_infinity or spec.x_min <= _frac(v) <= spec.x_max


def farey_edges(spec: RenderSpec) -> List[Tuple[FareyVertex, FareyVertex]]:
    """Edges met by Stern-Brocot descent to ``spec.depth`` below each unit interval."""
    edges: Set[Tuple[FareyVertex, FareyVertex]] = set()
    for n in range(floor(spec.x_min), ceil(spec.x_max) + 1):
        edges.add((vertex(n, 1), INFINITY))
        if n < ceil(spec.x_max):
            edges.add((vertex(n, 1), vertex(n + 1, 1)))
    stack = [((n, 1), (n + 1, 1), 0) for n in range(floor(spec.x_min), ceil(spec.x_max))]
    while stack:
        left, right, level = stack.pop()
        if level == spec.depth:
            continue
        mid = (left[0] + right[0], left[1] + right[1])
        edges.add((vertex(*left), vertex(*mid)))
        edges.add((vertex(*mid), vertex(*right)))
        stack.append((left, mid, level + 1))
        stack.append((mid, right, level + 1))
    kept = [e for e in edges if _in_range(e[0], spec) and _in_range(e[1], spec)]
    return sorted(kept, key=lambda e: (e[0].sort_key(), e[1].sort_key()))


def orbit_edges(A: Mat2, rep: FareyVertex, spec: RenderSpec, reach: int = 64) -> List[Tuple[FareyVertex, FareyVertex]]:
    """Edges ``(v, A v)`` of the orbit through ``rep`` with both ends in range."""
    out = []
    seen = set()
    for B in (A, A.inverse()):
        x = rep
        for _ in range(reach):
            y = act(B, x)
            key = frozenset((x, y))
            if key in seen:
                break
            seen.add(key)
            if _in_range(x, spec) and _in_range(y, spec):
                out.append((x, y) if B is A else (y, x))
            x = y
    return sorted(out, key=lambda e: (e[0].sort_key(), e[1].sort_key()))


class _Canvas:
    def __init__(self, spec: RenderSpec):
        self.spec = spec
        self.margin = 40
        self.scale = (spec.width - 2 * self.margin) / float(spec.x_max - spec.x_min)
        self.axis_y = spec.height - self.margin

    def x(self, v: FareyVertex) -> float:
        return self.margin + float(_frac(v) - self.spec.x_min) * self.scale

    def edge_element(self, e, attrs: str) -> str:
        a, b = e
        if a.is_infinity or b.is_infinity:
            finite = b if a.is_infinity else a
            x = self.x(finite)
            return f'<line x1="{x:.3f}" y1="{self.axis_y}" x2="{x:.3f}" y2="0" {attrs}/>'
        x1, x2 = sorted((self.x(a), self.x(b)))
        r = (x2 - x1) / 2
        return f'<path d="M {x1:.3f} {self.axis_y} A {r:.3f} {r:.3f} 0 0 1 {x2:.3f} {self.axis_y}" {attrs}/>'


def render_svg(spec: RenderSpec, A: Optional[Mat2] = None) -> str:
    """The SVG document; orbit highlights need ``A`` and its representatives."""
    canvas = _Canvas(spec)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line class="axis" x1="0" y1="{canvas.axis_y}" x2="{spec.width}" y2="{canvas.axis_y}" stroke="black"/>',
        '<g class="farey" fill="none" stroke="#999999" stroke-width="0.6">',
    ]
    edges = farey_edges(spec)
    lines += [canvas.edge_element(e, "") for e in edges]
    lines.append("</g>")
    if spec.highlighted_orbits:
        if A is None:
            raise ValueError("highlighting orbits needs the matrix")
        for i, (rep, color) in enumerate(spec.highlighted_orbits):
            lines.append(
                f'<g class="orbit" data-orbit="{i}" data-representative="{rep}" '
                f'fill="none" stroke="{color}" stroke-width="2.5">'
            )
            lines += [canvas.edge_element(e, "") for e in orbit_edges(A, rep, spec)]
            lines.append("</g>")
    labelled = {v for e in edges for v in e if not v.is_infinity and v.q <= spec.label_height}
    lines.append('<g class="ticks" font-family="sans-serif" font-size="12" text-anchor="middle">')
    for v in sorted(labelled, key=_frac):
        x = canvas.x(v)
        lines.append(f'<line x1="{x:.3f}" y1="{canvas.axis_y}" x2="{x:.3f}" y2="{canvas.axis_y + 5}" stroke="black"/>')
        lines.append(f'<text x="{x:.3f}" y="{canvas.axis_y + 20}">{v}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def orbit_highlights(A: Mat2, colors: Sequence[str] = ORBIT_COLORS) -> Tuple[Tuple[FareyVertex, str], ...]:
    reps = one_orbit_representatives(A)  # raises NotTwoGenerated
    return tuple((rep, colors[i % len(colors)]) for i, rep in enumerate(reps))


def render_matrix(A: Mat2, x_range: Tuple[Fraction, Fraction], depth: int = 6, **size) -> str:
    spec = RenderSpec(x_range[0], x_range[1], depth, orbit_highlights(A), **size)
    return render_svg(spec, A)

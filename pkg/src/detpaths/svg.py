"""Deterministic SVG 1.1 drawings of path families and overlays."""

from __future__ import annotations

from typing import Iterable
from xml.sax.saxutils import escape

from .overlays import GREEN, RED, BicolouredTrail, Overlay
from .paths import LatticePath, PathTuple, Point

CELL = 30
MARGIN = 30
COLOURS = {GREEN: "#2e8b57", RED: "#c0392b", "black": "#222222"}
OFFSET = {GREEN: -3, RED: 3}


def _bounds(points: Iterable[Point]) -> tuple[int, int, int, int]:
    pts = list(points) or [Point(0, 1)]
    return min(p.x for p in pts), max(p.x for p in pts), min(p.y for p in pts), max(p.y for p in pts)


class _Canvas:
    def __init__(self, points: Iterable[Point]):
        self.x0, self.x1, self.y0, self.y1 = _bounds(points)
        self.width = (self.x1 - self.x0) * CELL + 2 * MARGIN
        self.height = (self.y1 - self.y0) * CELL + 2 * MARGIN
        self.items: list[str] = []

    def xy(self, p: Point, shift: int = 0) -> tuple[int, int]:
        return (
            MARGIN + (p.x - self.x0) * CELL + shift,
            MARGIN + (self.y1 - p.y) * CELL - shift,
        )

    def grid(self):
        for gx in range(self.x0, self.x1 + 1):
            for gy in range(self.y0, self.y1 + 1):
                cx, cy = self.xy(Point(gx, gy))
                self.items.append(f'<circle cx="{cx}" cy="{cy}" r="1.5" fill="#bbbbbb"/>')

    def path(self, path: LatticePath, colour: str, shift: int = 0, width: int = 3):
        coords = " ".join(f"{a},{b}" for a, b in (self.xy(p, shift) for p in path.points()))
        self.items.append(
            f'<polyline points="{coords}" fill="none" stroke="{COLOURS[colour]}" '
            f'stroke-width="{width}" stroke-linejoin="round" stroke-linecap="round"/>'
        )

    def dot(self, p: Point, colour: str, r: int = 4):
        cx, cy = self.xy(p)
        self.items.append(f'<circle cx="{cx}" cy="{cy}" r="{r}" fill="{COLOURS[colour]}"/>')

    def segment(self, p: Point, q: Point, colour: str, shift: int, width: int, opacity: str):
        (a, b), (c, d) = self.xy(p, shift), self.xy(q, shift)
        self.items.append(
            f'<line x1="{a}" y1="{b}" x2="{c}" y2="{d}" stroke="{colour}" '
            f'stroke-width="{width}" stroke-opacity="{opacity}" stroke-linecap="round"/>'
        )

    def label(self, text: str):
        self.items.append(f'<text x="{MARGIN}" y="{MARGIN // 2}" font-family="monospace" font-size="12">{escape(text)}</text>')

    def render(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.width}" height="{self.height}" viewBox="0 0 {self.width} {self.height}">\n'
        )
        return head + "\n".join(self.items) + "\n</svg>\n"


def _family_points(fam: PathTuple) -> list[Point]:
    return [q for p in fam.paths for q in p.points()]


def paths_svg(fam: PathTuple, title: str = "") -> str:
    c = _Canvas(_family_points(fam))
    c.grid()
    for p in fam.paths:
        c.path(p, "black")
    for q in fam.lower_points() + fam.upper_points():
        c.dot(q, "black")
    if title:
        c.label(title)
    return c.render()


def overlay_svg(o: Overlay, highlight: BicolouredTrail | None = None, title: str = "") -> str:
    """Green and red paths drawn with opposite small offsets; a highlighted trail is underlaid in grey."""
    c = _Canvas(_family_points(o.green) + _family_points(o.red))
    c.grid()
    if highlight is not None:
        for p, q, colour in highlight.arcs:
            c.segment(p, q, "#888888", OFFSET[colour], 9, "0.5")
    for colour in (GREEN, RED):
        for p in o.family(colour).paths:
            c.path(p, colour, OFFSET[colour])
    for q, colour in sorted(o.coloured_points().items()):
        c.dot(q, colour, 5)
    if title:
        c.label(title)
    return c.render()

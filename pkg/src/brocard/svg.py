"""Deterministic SVG figures of a triangle and its Brocard configuration.

Floats appear only here.  Coordinates are printed with six decimals, the
y-axis is flipped so the figure reads like a textbook diagram, and elements
are emitted in a fixed order with stable ids.
"""

from __future__ import annotations

import math
from typing import Iterable

from .centers import center_set
from .geom import Circle, Point, Triangle, circumcircle

LAYERS = ("circumcircle", "brocard", "cevians", "steiner", "sondat")


def _num(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Figure:
    def __init__(self) -> None:
        self.elements: list[tuple[str, str]] = []  # (kind, markup with {sw} / {fs} / {r} placeholders)
        self.xs: list[float] = []
        self.ys: list[float] = []

    def _xy(self, P: Point) -> tuple[float, float]:
        x, y = float(P.x), -float(P.y)
        self.xs.append(x)
        self.ys.append(y)
        return x, y

    def polygon(self, ident: str, pts: Iterable[Point], stroke: str) -> None:
        coords = " ".join(f"{_num(x)},{_num(y)}" for x, y in (self._xy(P) for P in pts))
        self.elements.append(
            ("polygon", f'<polygon id="{ident}" points="{coords}" fill="none" stroke="{stroke}" stroke-width="{{sw}}"/>')
        )

    def line(self, ident: str, P: Point, Q: Point, stroke: str, dashed: bool = False) -> None:
        (x1, y1), (x2, y2) = self._xy(P), self._xy(Q)
        dash = ' stroke-dasharray="{dash}"' if dashed else ""
        self.elements.append(
            (
                "line",
                f'<line id="{ident}" x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
                f'stroke="{stroke}" stroke-width="{{sw}}"{dash}/>',
            )
        )

    def circle(self, ident: str, c: Circle, stroke: str) -> None:
        cx, cy = self._xy(c.center)
        r = math.sqrt(float(c.r2))
        self.xs += [cx - r, cx + r]
        self.ys += [cy - r, cy + r]
        self.elements.append(
            (
                "circle",
                f'<circle id="{ident}" cx="{_num(cx)}" cy="{_num(cy)}" r="{_num(r)}" fill="none" '
                f'stroke="{stroke}" stroke-width="{{sw}}"/>',
            )
        )

    def marker(self, ident: str, P: Point, label: str) -> None:
        x, y = self._xy(P)
        self.elements.append(
            ("marker", f'<circle id="pt-{ident}" class="point" cx="{_num(x)}" cy="{_num(y)}" r="{{r}}" fill="black"/>')
        )
        self.label(ident, P, label)

    def label(self, ident: str, P: Point, text: str) -> None:
        x, y = self._xy(P)
        self.elements.append(
            ("text", f'<text id="label-{ident}" x="{_num(x)}" y="{_num(y)}" dx="{{r}}" dy="-{{r}}" font-size="{{fs}}">{text}</text>')
        )

    def render(self) -> str:
        x0, x1, y0, y1 = min(self.xs), max(self.xs), min(self.ys), max(self.ys)
        size = max(x1 - x0, y1 - y0)
        margin = 0.1 * size
        vx, vy = x0 - margin, y0 - margin
        vw, vh = x1 - x0 + 2 * margin, y1 - y0 + 2 * margin
        fill = {"sw": _num(size / 250), "fs": _num(size / 30), "r": _num(size / 120), "dash": _num(size / 60)}
        body = "\n".join("  " + markup.format(**fill) for _, markup in self.elements)
        return (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{_num(vx)} {_num(vy)} {_num(vw)} {_num(vh)}">\n'
            f"{body}\n</svg>\n"
        )


def render_svg(T: Triangle, layers: Iterable[str] = ()) -> str:
    """SVG text for ``T`` plus the requested layers (any of ``LAYERS``)."""
    layers = set(layers)
    unknown = layers - set(LAYERS)
    if unknown:
        raise ValueError(f"unknown layers: {', '.join(sorted(unknown))}")
    cs = center_set(T) if layers else None

    fig = _Figure()
    fig.polygon("triangle", T.vertices, "black")
    for name, V in zip("ABC", T.vertices):
        fig.label(name, V, name)

    if "circumcircle" in layers or "steiner" in layers:
        fig.circle("circumcircle", circumcircle(T), "gray")
    if "brocard" in layers:
        B1 = cs.brocard_triangle
        fig.polygon("brocard-triangle", B1.vertices, "blue")
        fig.circle("brocard-circle", cs.brocard_circle, "blue")
        for name, V in zip(("A1", "B1", "C1"), B1.vertices):
            fig.marker(name, V, name)
        fig.marker("K", cs.K, "K")
        if "sondat" not in layers:
            fig.marker("O", cs.O, "O")
    if "cevians" in layers:
        for name, V, V1 in zip("ABC", T.vertices, cs.brocard_triangle.vertices):
            fig.line(f"cevian-{name}-omega1", V, cs.omega1, "darkgreen", dashed=True)
            fig.line(f"cevian-{name}-{name}1", V, V1, "purple", dashed=True)
        fig.marker("omega1", cs.omega1, "Ω")
        if "sondat" not in layers:
            fig.marker("omega3", cs.omega3, "Ω″")
    if "steiner" in layers:
        for name, V in zip("ABC", T.vertices):
            fig.line(f"parallel-{name}", V, cs.steiner, "darkorange")
            fig.line(f"perpendicular-{name}", V, cs.tarry, "teal", dashed=True)
        if "sondat" not in layers:
            fig.marker("S", cs.steiner, "S")
            fig.marker("T", cs.tarry, "T")
    if "sondat" in layers:
        # O is the midpoint of TS and the third Brocard point lies inside, so segment TS carries all four
        fig.line("sondat-line", cs.tarry, cs.steiner, "red")
        for ident, P, label in (("T", cs.tarry, "T"), ("O", cs.O, "O"), ("omega3", cs.omega3, "Ω″"), ("S", cs.steiner, "S")):
            fig.marker(ident, P, label)
    return fig.render()

"""Standalone SVG drawing of an ellipse and its ladders."""

from __future__ import annotations

import math
from collections.abc import Sequence
from pathlib import Path

from .conic import Point, TangentEllipse, conic_from_tangent_ellipse, extreme_tangent_points, restrict_to_line
from .solver import LadderSolution

SAMPLES_PER_BRANCH = 180
PIXEL_WIDTH = 640


def ellipse_polyline(e: TangentEllipse, samples: int = SAMPLES_PER_BRANCH) -> list[Point]:
    """Closed polyline around the ellipse, 2*samples points.

    The ellipse spans x in [0, p_v.x].  Each abscissa (cosine-spaced, so the
    vertical-tangent ends are dense) cuts it in two points found by solving
    the conic as a quadratic in y; the upper branch is walked left to right
    and the lower one back.
    """
    conic = conic_from_tangent_ellipse(e)
    _, p_v = extreme_tangent_points(e)
    half = 0.5 * p_v.x
    upper, lower = [], []
    for k in range(samples):
        x = half - half * math.cos(math.pi * k / (samples - 1))
        alpha, beta, gamma = restrict_to_line(conic, Point(x, 0.0), (0.0, 1.0))
        sq = math.sqrt(max(beta * beta - 4.0 * alpha * gamma, 0.0))
        upper.append(Point(x, (-beta + sq) / (2.0 * alpha)))
        lower.append(Point(x, (-beta - sq) / (2.0 * alpha)))
    return upper + lower[::-1]


def _n(value: float) -> str:
    return f"{value:.6g}"


def render_svg(e: TangentEllipse, solutions: Sequence[LadderSolution]) -> str:
    p_h, p_v = extreme_tangent_points(e)
    xmax = max([2 * e.c, p_v.x, *(s.u for s in solutions)])
    ymax = max([2 * e.d, p_h.y, *(s.v for s in solutions)])
    mx, my = 0.05 * xmax, 0.05 * ymax
    width, height = xmax + 2 * mx, ymax + 2 * my
    stroke = 0.004 * max(width, height)
    dot = 2.5 * stroke

    def xy(p: Point) -> tuple[str, str]:
        # SVG y grows downward
        return _n(p.x + 0.0), _n(0.0 - p.y)

    pts = " ".join(",".join(xy(p)) for p in ellipse_polyline(e))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{PIXEL_WIDTH}" '
        f'height="{_n(PIXEL_WIDTH * height / width)}" '
        f'viewBox="{_n(-mx)} {_n(-(ymax + my))} {_n(width)} {_n(height)}">',
        f'<g fill="none" stroke-width="{_n(stroke)}">',
        f'<line class="axis" x1="0" y1="0" x2="{_n(xmax + mx)}" y2="0" stroke="black"/>',
        f'<line class="axis" x1="0" y1="0" x2="0" y2="{_n(-(ymax + my))}" stroke="black"/>',
        f'<polygon class="ellipse" stroke="steelblue" points="{pts}"/>',
    ]
    for sol in solutions:
        (x1, y1), (x2, y2) = xy(Point(sol.u, 0.0)), xy(Point(0.0, sol.v))
        lines.append(f'<line class="ladder" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="firebrick"/>')
    lines.append("</g>")
    for sol in solutions:
        cx, cy = xy(Point(*sol.tangency))
        lines.append(f'<circle class="tangency" cx="{cx}" cy="{cy}" r="{_n(dot)}" fill="firebrick"/>')
    for p in (p_h, p_v):
        cx, cy = xy(p)
        lines.append(f'<circle class="arc-end" cx="{cx}" cy="{cy}" r="{_n(dot)}" fill="steelblue"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_svg(e: TangentEllipse, solutions: Sequence[LadderSolution], path: str | Path) -> None:
    Path(path).write_text(render_svg(e, solutions), encoding="utf-8")

"""Independent checks for ladder solutions.

None of these routines use the unimodality of f, so a mistake in the
solver's critical-point logic cannot confirm itself here.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .conic import Point, TangentEllipse, conic_from_tangent_ellipse, evaluate, line_tangency_discriminant
from .solver import LadderSolution, Quartic, ReducedForm

DEFAULT_GRID = 10_000
_REFINE_ITER = 200


@dataclass(frozen=True)
class VerificationReport:
    length_residual: float
    tangency_residual: float
    on_conic_residual: float
    on_line_residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return all(
            r <= self.tolerance
            for r in (self.length_residual, self.tangency_residual, self.on_conic_residual, self.on_line_residual)
        )

    def as_dict(self) -> dict[str, float | bool]:
        return {
            "length_residual": self.length_residual,
            "tangency_residual": self.tangency_residual,
            "on_conic_residual": self.on_conic_residual,
            "on_line_residual": self.on_line_residual,
            "passed": self.passed,
        }


class GridScan(NamedTuple):
    roots: list[float]
    # the sampled minimum of f - s² came within 1e-6 s² of zero: a pair of
    # close roots may have merged, or a tangential touch may be missed
    ambiguous: bool


def _refine(fn, lo: float, hi: float) -> float:
    f_lo = fn(lo)
    for _ in range(_REFINE_ITER):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        f_mid = fn(mid)
        if f_mid == 0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def grid_scan(r: ReducedForm, s: float, n: int = DEFAULT_GRID) -> GridScan:
    if n < 100:
        raise ValueError("grid needs at least 100 points")
    c, d, j, s2 = r.c, r.d, r.j, s * s

    def excess(t):
        return (c / t) ** 2 + (d * (1 - t) / (j - t)) ** 2 - s2

    ts = j * np.arange(1, n + 1) / (n + 1)
    vals = excess(ts)
    signs = np.sign(vals)
    idx = np.nonzero(signs[:-1] * signs[1:] < 0)[0]
    roots = [_refine(excess, float(ts[i]), float(ts[i + 1])) for i in idx]
    roots += [float(ts[i]) for i in np.nonzero(vals == 0)[0]]
    roots.sort()
    ambiguous = bool(abs(vals.min()) <= 1e-6 * s2)
    return GridScan(roots, ambiguous)


def grid_scan_solve(r: ReducedForm, s: float, n: int = DEFAULT_GRID) -> list[float]:
    """Roots of f(t) = s² on (0, j) from sign changes on a uniform grid."""
    return grid_scan(r, s, n).roots


def _poly_eval(coeffs: Sequence[float], t: float) -> float:
    acc = 0.0
    for q in coeffs:
        acc = acc * t + q
    return acc


def _strip(coeffs: Sequence[float]) -> list[float]:
    out = list(coeffs)
    while out and out[0] == 0:
        out.pop(0)
    return out


def _derivative(coeffs: Sequence[float]) -> list[float]:
    n = len(coeffs) - 1
    return [q * (n - i) for i, q in enumerate(coeffs[:-1])]


def _real_roots(coeffs: Sequence[float], lo: float, hi: float) -> list[float]:
    # Roots of the derivative split (lo, hi) into pieces on which the
    # polynomial is monotone; each piece holds at most one root.
    coeffs = _strip(coeffs)
    deg = len(coeffs) - 1
    if deg <= 0:
        return []
    if deg == 1:
        root = -coeffs[1] / coeffs[0]
        return [root] if lo < root < hi else []
    crit = _real_roots(_derivative(coeffs), lo, hi)
    knots = [lo, *crit, hi]
    roots: list[float] = []
    for k in crit:
        if _poly_eval(coeffs, k) == 0:
            roots.append(k)
    for a, b in zip(knots, knots[1:]):
        pa, pb = _poly_eval(coeffs, a), _poly_eval(coeffs, b)
        if pa * pb < 0:
            roots.append(_refine(lambda t: _poly_eval(coeffs, t), a, b))
    return sorted(roots)


def poly_roots_in_interval(q: Quartic, lo: float, hi: float) -> list[float]:
    """Real roots of ``q`` in the open interval (lo, hi), ascending.

    Isolation is by derivative bracketing: critical points of the quartic
    (found recursively from its cubic and quadratic derivatives) cut the
    interval into monotone pieces, and every piece with a sign change is
    refined by bisection.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    return _real_roots(q.coeffs, lo, hi)


def verify_solution(e: TangentEllipse, s: float, sol: LadderSolution, tol: float) -> VerificationReport:
    """Recheck a claimed ladder using only the conic of ``e`` and the claimed u, v, tangency point."""
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    conic = conic_from_tangent_ellipse(e)
    u, v = sol.u, sol.v
    p = Point(*sol.tangency)
    disc = line_tangency_discriminant(conic, u, v)
    scale = conic.term_scale(p)
    return VerificationReport(
        length_residual=abs(u * u + v * v - s * s) / (s * s),
        tangency_residual=abs(disc.relative),
        on_conic_residual=abs(evaluate(conic, p)) / scale if scale else math.inf,
        on_line_residual=abs(p.x / u + p.y / v - 1.0),
        tolerance=tol,
    )

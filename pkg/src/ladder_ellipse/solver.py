"""Ladder positions tangent to an axis-tangent ellipse.

A ladder from (u, 0) to (0, v) touching the ellipse is the hypotenuse of a
triangle in which the ellipse is inscribed with floor parameter t and wall
parameter w = (j - t)/(1 - t).  Its squared length as a function of t,

    f(t) = c²/t² + d²(1 - t)²/(j - t)²,   0 < t < j,

blows up at both ends and has a single interior minimum t0.  Ladders of
length s exist iff s >= s0 = sqrt(f(t0)); there are two of them when s > s0.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

from .conic import Point, TangentEllipse
from .errors import DegenerateFactorError, DomainError
from .triangle import InscriptionParams, tangency_points

#: bracket offset from the poles of f at 0 and j, relative to j
ENDPOINT_EPS = 1e-13
#: bisection stops once the bracket is narrower than this, relative to j
BISECT_WIDTH = 1e-14
BISECT_MAX_ITER = 200
#: |s - s0| <= DOUBLE_ROOT_TOL * max(s0, 1) is classified as the double root
DOUBLE_ROOT_TOL = 1e-9


@dataclass(frozen=True)
class LadderProblem:
    ellipse: TangentEllipse
    s: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.s) and self.s > 0):
            raise ValueError(f"ladder length must be positive, got {self.s!r}")


@dataclass(frozen=True)
class ReducedForm:
    c: float
    d: float
    j: float

    def __post_init__(self) -> None:
        if not 0 < self.j < 1:
            raise ValueError(f"j must lie in (0,1), got {self.j!r}")


@dataclass(frozen=True)
class LadderSolution:
    """One admissible ladder.

    ``height`` is v, where the ladder meets the wall.  Both intercepts are
    kept so either reading of "height" is available.
    """

    t: float
    w: float
    u: float
    v: float
    tangency: Point
    height: float
    multiplicity: int = 1


@dataclass(frozen=True)
class CriticalInfo:
    t0: float
    s0: float

    @property
    def s0_squared(self) -> float:
        return self.s0 * self.s0


@dataclass(frozen=True)
class Quartic:
    """p(t) = q4 t⁴ + q3 t³ + q2 t² + q1 t + q0."""

    q4: float
    q3: float
    q2: float
    q1: float
    q0: float

    @property
    def coeffs(self) -> tuple[float, ...]:
        return (self.q4, self.q3, self.q2, self.q1, self.q0)

    def __call__(self, t: float) -> float:
        acc = 0.0
        for q in self.coeffs:
            acc = acc * t + q
        return acc


def reduce(e: TangentEllipse) -> ReducedForm:
    return ReducedForm(e.c, e.d, 0.5 * (1.0 + e.cross / (e.c * e.d)))


def _check_domain(r: ReducedForm, t: float) -> None:
    if not 0 < t < r.j:
        raise DomainError(f"t={t!r} outside (0, {r.j!r})")


def eval_f(r: ReducedForm, t: float) -> float:
    _check_domain(r, t)
    return (r.c / t) ** 2 + (r.d * (1.0 - t) / (r.j - t)) ** 2


def _slope_balance(r: ReducedForm, t: float) -> float:
    # strictly decreasing on (0, j); f'(t) = -2 * this
    return r.c**2 / t**3 - r.d**2 * (1.0 - t) * (1.0 - r.j) / (r.j - t) ** 3


def eval_f_prime(r: ReducedForm, t: float) -> float:
    _check_domain(r, t)
    return -2.0 * _slope_balance(r, t)


def _bisect(fn: Callable[[float], float], lo: float, hi: float, width: float) -> float:
    """Root of ``fn`` on [lo, hi] given opposite signs at the ends."""
    f_lo = fn(lo)
    if f_lo == 0:
        return lo
    if fn(hi) == 0:
        return hi
    for _ in range(BISECT_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if hi - lo <= width or mid in (lo, hi):
            return mid
        f_mid = fn(mid)
        if f_mid == 0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    raise RuntimeError("bisection did not converge")


def _bracket(r: ReducedForm) -> tuple[float, float, float]:
    eps = ENDPOINT_EPS * r.j
    return eps, r.j - eps, BISECT_WIDTH * r.j


def critical_point(r: ReducedForm) -> CriticalInfo:
    lo, hi, width = _bracket(r)
    t0 = _bisect(lambda t: _slope_balance(r, t), lo, hi, width)
    return CriticalInfo(t0, math.sqrt(eval_f(r, t0)))


def _solution(r: ReducedForm, t: float, multiplicity: int = 1) -> LadderSolution:
    w = (r.j - t) / (1.0 - t)
    u, v = r.c / t, r.d / w
    t3 = tangency_points(InscriptionParams.of(u, v, w, t)).t3
    return LadderSolution(t=t, w=w, u=u, v=v, tangency=t3, height=v, multiplicity=multiplicity)


def solve_reduced(r: ReducedForm, s: float, crit: CriticalInfo | None = None) -> list[LadderSolution]:
    crit = crit or critical_point(r)
    if abs(s - crit.s0) <= DOUBLE_ROOT_TOL * max(crit.s0, 1.0):
        return [_solution(r, crit.t0, multiplicity=2)]
    if s < crit.s0:
        return []
    lo, hi, width = _bracket(r)
    s2 = s * s

    def excess(t: float) -> float:
        return eval_f(r, t) - s2

    left = _bisect(excess, lo, crit.t0, width)
    right = _bisect(excess, crit.t0, hi, width)
    return [_solution(r, left), _solution(r, right)]


def solve(p: LadderProblem) -> list[LadderSolution]:
    """All ladders of length ``p.s`` touching the ellipse, sorted by t."""
    return solve_reduced(reduce(p.ellipse), p.s)


def quartic_from(p: LadderProblem) -> Quartic:
    """Expansion of (c² − s²t²)(j − t)² + d²t²(1 − t)².

    Its roots in (0, j) are the roots of f(t) = s², since
    p(t) = (f(t) − s²)·t²(j − t)².
    """
    r = reduce(p.ellipse)
    c2, d2, j, s2 = r.c**2, r.d**2, r.j, p.s**2
    return Quartic(d2 - s2, 2 * s2 * j - 2 * d2, c2 + d2 - s2 * j * j, -2 * c2 * j, c2 * j * j)


def circle_factorization(c: float, s: float) -> tuple[tuple[float, float, float], tuple[float, float, float]]:
    """Quadratic factors q1, q2 with −¼·q1·q2 equal to the circle-case quartic (d = c, cross = 0)."""
    if not (c > 0 and s > 0):
        raise ValueError("c and s must be positive")
    if s == c:
        raise DegenerateFactorError("s == c makes the first factor linear")
    return (2 * (s - c), -(s - 2 * c), -c), (2 * (s + c), -(s + 2 * c), c)


def circle_s0(c: float) -> float:
    """Critical ladder length for a circle of radius c touching both axes."""
    if not c > 0:
        raise ValueError("c must be positive")
    return 2.0 * (math.sqrt(2.0) + 1.0) * c

"""Conic algebra for ellipses tangent to both positive coordinate axes.

Coefficients use the factor-of-two convention

    a*x**2 + b*y**2 + 2*cxy*x*y + 2*dx*x + 2*ey*y + f = 0

so the axis-tangent form transcribes without rescaling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DegenerateLineError, InvalidEllipseError


class Point(NamedTuple):
    x: float
    y: float


def _require_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise InvalidEllipseError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class TangentEllipse:
    """Ellipse in the first quadrant touching the x-axis at (c, 0) and the y-axis at (0, d).

    ``cross`` is the xy coefficient scale: the conic is
    d²x² + c²y² + 2·cross·xy − 2cd²x − 2c²dy + c²d² = 0.
    """

    c: float
    d: float
    cross: float = 0.0

    def __post_init__(self) -> None:
        _require_finite(c=self.c, d=self.d, cross=self.cross)
        if self.c <= 0:
            raise InvalidEllipseError(f"c must be positive, got {self.c!r}")
        if self.d <= 0:
            raise InvalidEllipseError(f"d must be positive, got {self.d!r}")
        if not self.c * self.d > abs(self.cross):
            raise InvalidEllipseError("ellipse condition cd>|C| violated")


@dataclass(frozen=True)
class ConicCoeffs:
    a: float
    b: float
    cxy: float
    dx: float
    ey: float
    f: float

    def __post_init__(self) -> None:
        if self.a == 0 and self.b == 0 and self.cxy == 0:
            raise ValueError("conic has no quadratic part")

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.a, self.b, self.cxy, self.dx, self.ey, self.f)

    def scaled(self, k: float) -> ConicCoeffs:
        return ConicCoeffs(*(k * c for c in self.as_tuple()))

    def quadratic_part_det(self) -> float:
        return self.a * self.b - self.cxy * self.cxy

    def gradient(self, p: Point) -> tuple[float, float]:
        x, y = p
        gx = 2.0 * (self.a * x + self.cxy * y + self.dx)
        gy = 2.0 * (self.b * y + self.cxy * x + self.ey)
        return gx, gy

    def term_scale(self, p: Point) -> float:
        """Sum of the absolute values of the six terms at ``p``.

        Natural magnitude against which :func:`evaluate` is compared.
        """
        x, y = p
        return (
            abs(self.a * x * x)
            + abs(self.b * y * y)
            + abs(2.0 * self.cxy * x * y)
            + abs(2.0 * self.dx * x)
            + abs(2.0 * self.ey * y)
            + abs(self.f)
        )


class TangencyDiscriminant(NamedTuple):
    """Discriminant of a conic restricted to a line, with its natural scale.

    ``value`` < 0: no contact, ≈ 0: tangent, > 0: secant.  Callers compare
    ``relative`` (value / scale) against their own tolerance.
    """

    value: float
    scale: float

    @property
    def relative(self) -> float:
        return self.value / self.scale if self.scale else 0.0


def conic_from_tangent_ellipse(e: TangentEllipse) -> ConicCoeffs:
    c, d = e.c, e.d
    return ConicCoeffs(d * d, c * c, e.cross, -c * d * d, -c * c * d, c * c * d * d)


def evaluate(conic: ConicCoeffs, p: Point) -> float:
    x, y = p
    return (
        conic.a * x * x
        + conic.b * y * y
        + 2.0 * conic.cxy * x * y
        + 2.0 * conic.dx * x
        + 2.0 * conic.ey * y
        + conic.f
    )


def restrict_to_line(
    conic: ConicCoeffs, origin: Point, direction: tuple[float, float]
) -> tuple[float, float, float]:
    """Coefficients (alpha, beta, gamma) of tau -> G(origin + tau*direction)."""
    ux, uy = direction
    gx, gy = conic.gradient(origin)
    alpha = conic.a * ux * ux + conic.b * uy * uy + 2.0 * conic.cxy * ux * uy
    beta = gx * ux + gy * uy
    gamma = evaluate(conic, origin)
    return alpha, beta, gamma


def line_tangency_discriminant(conic: ConicCoeffs, u: float, v: float) -> TangencyDiscriminant:
    """Discriminant of the conic along the line through (u, 0) and (0, v).

    The line is parametrised by x, i.e. y = v(1 - x/u), so for the unscaled
    worked-example conic and u = v = 5 the quadratic is 3x² − 22x + 36.
    """
    if not (u > 0 and v > 0):
        raise ValueError("intercepts must be positive")
    alpha, beta, gamma = restrict_to_line(conic, Point(0.0, v), (1.0, -v / u))
    if alpha == 0:
        raise DegenerateLineError("line substitution is not quadratic")
    return TangencyDiscriminant(beta * beta - 4.0 * alpha * gamma, beta * beta + 4.0 * abs(alpha * gamma))


def quadratic_roots(alpha: float, beta: float, gamma: float) -> tuple[float, float]:
    """Real roots of alpha*x² + beta*x + gamma, small-root cancellation avoided.

    A slightly negative discriminant (rounding at a double root) is clamped to 0.
    """
    disc = beta * beta - 4.0 * alpha * gamma
    if disc < 0:
        if disc < -1e-12 * (beta * beta + abs(4.0 * alpha * gamma)):
            raise ValueError("quadratic has no real roots")
        disc = 0.0
    sq = math.sqrt(disc)
    q = -0.5 * (beta + math.copysign(sq, beta))
    if q == 0:
        return 0.0, 0.0
    r1, r2 = q / alpha, gamma / q
    return (r1, r2) if r1 <= r2 else (r2, r1)


def _far_root(conic: ConicCoeffs, origin: Point, direction: tuple[float, float], known: Point) -> Point:
    alpha, beta, gamma = restrict_to_line(conic, origin, direction)
    pts = [
        Point(origin.x + tau * direction[0], origin.y + tau * direction[1])
        for tau in quadratic_roots(alpha, beta, gamma)
    ]
    return max(pts, key=lambda p: math.hypot(p.x - known.x, p.y - known.y))


def extreme_tangent_points(e: TangentEllipse) -> tuple[Point, Point]:
    """Points of the ellipse with horizontal (p_h) and vertical (p_v) tangents.

    These bound the arc, away from the axes, on which ladders can touch.
    Each is the intersection of the conic with a zero line of one partial
    derivative; of the two intersections, the one farther from the axis
    tangency point is kept.
    """
    conic = conic_from_tangent_ellipse(e)
    a, b, cxy, dx, ey = conic.a, conic.b, conic.cxy, conic.dx, conic.ey
    # x-partial vanishes on x = -(cxy*y + dx)/a
    p_h = _far_root(conic, Point(-dx / a, 0.0), (-cxy / a, 1.0), Point(e.c, 0.0))
    # y-partial vanishes on y = -(cxy*x + ey)/b
    p_v = _far_root(conic, Point(0.0, -ey / b), (1.0, -cxy / b), Point(0.0, e.d))
    return p_h, p_v

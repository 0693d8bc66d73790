"""Ellipses inscribed in the right triangle (0,0), (u,0), (0,v).

Every such ellipse is indexed by (w, t) in the open unit square: it touches
the floor at (u*t, 0) and the wall at (0, v*w).  Its center runs over the
interior of the medial triangle as (w, t) runs over the square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .conic import ConicCoeffs, Point
from .errors import OutsideMedialTriangleError


@dataclass(frozen=True)
class TriangleLegs:
    u: float
    v: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.u) and math.isfinite(self.v)):
            raise ValueError("legs must be finite")
        if not (self.u > 0 and self.v > 0):
            raise ValueError(f"legs must be positive, got u={self.u!r}, v={self.v!r}")


@dataclass(frozen=True)
class InscriptionParams:
    legs: TriangleLegs
    w: float
    t: float

    def __post_init__(self) -> None:
        if not 0 < self.w < 1:
            raise ValueError(f"w must lie in (0,1), got {self.w!r}")
        if not 0 < self.t < 1:
            raise ValueError(f"t must lie in (0,1), got {self.t!r}")
        assert self.w + self.t - 2 * self.w * self.t > 0

    @classmethod
    def of(cls, u: float, v: float, w: float, t: float) -> InscriptionParams:
        return cls(TriangleLegs(u, v), w, t)


class Tangencies(NamedTuple):
    t1: Point  # floor
    t2: Point  # wall
    t3: Point  # hypotenuse


def center_from_params(p: InscriptionParams) -> Point:
    u, v, w, t = p.legs.u, p.legs.v, p.w, p.t
    den = w + (1.0 - w) * t
    return Point(0.5 * t * u / den, 0.5 * w * v / den)


def medial_violation(legs: TriangleLegs, center: Point) -> str | None:
    """Name of the first strict medial-triangle inequality ``center`` fails, or None."""
    u, v = legs.u, legs.v
    x, y = center
    if not x > 0:
        return "0 < x"
    if not x < u / 2:
        return "x < u/2"
    if not y < v / 2:
        return "y < v/2"
    if not y > v / 2 - (v / u) * x:
        return "v/2 - (v/u)x < y"
    return None


def params_from_center(legs: TriangleLegs, center: Point) -> tuple[float, float]:
    """Inverse of :func:`center_from_params`; returns (w, t)."""
    failed = medial_violation(legs, center)
    if failed is not None:
        raise OutsideMedialTriangleError(failed)
    u, v = legs.u, legs.v
    x, y = center
    num = 2.0 * u * y + 2.0 * v * x - u * v
    return num / (2.0 * x * v), num / (2.0 * u * y)


def inscribed_conic(p: InscriptionParams) -> ConicCoeffs:
    """Conic of the inscribed ellipse, coefficient scale kept unnormalised."""
    u, v, w, t = p.legs.u, p.legs.v, p.w, p.t
    vw, ut = v * w, u * t
    return ConicCoeffs(
        a=vw * vw,
        b=ut * ut,
        cxy=w * t * (2 * w + 2 * t - 2 * w * t - 1) * u * v,
        dx=-ut * vw * vw,
        ey=-vw * ut * ut,
        f=(ut * vw) ** 2,
    )


def tangency_points(p: InscriptionParams) -> Tangencies:
    u, v, w, t = p.legs.u, p.legs.v, p.w, p.t
    den = w + t - 2.0 * w * t
    return Tangencies(
        t1=Point(u * t, 0.0),
        t2=Point(0.0, v * w),
        t3=Point(u * t * (1.0 - w) / den, v * w * (1.0 - t) / den),
    )


def is_nondegenerate_ellipse(conic: ConicCoeffs) -> bool:
    """True for a real, non-point ellipse.

    Uses the two discriminants for A x² + B y² + 2C xy + D x + E y + F with
    D, E the full linear coefficients.  The second one is sign-corrected by
    A so that negating every coefficient does not change the answer.
    """
    A, B, C, F = conic.a, conic.b, conic.cxy, conic.f
    D, E = 2.0 * conic.dx, 2.0 * conic.ey
    if not A * B - C * C > 0:
        return False
    delta = A * E * E + B * D * D + 4 * F * C * C - 2 * C * D * E - 4 * A * B * F
    return math.copysign(1.0, A) * delta > 0

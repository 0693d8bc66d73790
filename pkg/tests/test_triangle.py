import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ladder_ellipse import (
    ConicCoeffs,
    InscriptionParams,
    OutsideMedialTriangleError,
    Point,
    TangentEllipse,
    TriangleLegs,
    center_from_params,
    conic_from_tangent_ellipse,
    evaluate,
    inscribed_conic,
    is_nondegenerate_ellipse,
    params_from_center,
    tangency_points,
)

open_unit = st.floats(1e-3, 1 - 1e-3)
legs = st.floats(0.1, 10)


@st.composite
def params(draw):
    return InscriptionParams.of(draw(legs), draw(legs), draw(open_unit), draw(open_unit))


def _slope(conic, p):
    gx, gy = conic.gradient(p)
    return -gx / gy


def _closed_form_slope(p, x, y):
    # closed-form dy/dx from implicit differentiation of the inscribed conic
    u, v, w, t = p.legs.u, p.legs.v, p.w, p.t
    num = -2 * u * y * (1 - w) * t**2 + u * (v * w - 2 * w * y + y) * t - v * w * x
    den = (2 * w**2 * v * x - 2 * v * w * x - u * y + v * w * u) * t - v * w * x * (2 * w - 1)
    return -(v * w) / (u * t) * num / den


def test_center_symmetric():
    assert center_from_params(InscriptionParams.of(2, 2, 0.5, 0.5)) == pytest.approx((2 / 3, 2 / 3))


def test_center_worked_example():
    p = InscriptionParams.of(6, 8, 0.25, 2 / 3)
    # exact rational evaluation
    u, v, w, t = Fraction(6), Fraction(8), Fraction(1, 4), Fraction(2, 3)
    den = w + (1 - w) * t
    exact = (t * u / den / 2, w * v / den / 2)
    assert exact == (Fraction(8, 3), Fraction(4, 3))
    assert center_from_params(p) == pytest.approx((8 / 3, 4 / 3), rel=1e-15)
    # the gradient of the conic vanishes at its centre
    conic = inscribed_conic(p)
    assert conic.gradient(Point(8 / 3, 4 / 3)) == pytest.approx((0, 0), abs=1e-12)


def test_params_from_center_examples():
    assert params_from_center(TriangleLegs(2, 2), Point(2 / 3, 2 / 3)) == pytest.approx((0.5, 0.5))
    assert params_from_center(TriangleLegs(6, 8), Point(8 / 3, 4 / 3)) == pytest.approx((0.25, 2 / 3))


@pytest.mark.parametrize(
    "center, failed",
    [((1, 0.9), "x < u/2"), ((0.5, 1), "y < v/2"), ((0.2, 0.5), "v/2 - (v/u)x < y"), ((0, 0.5), "0 < x")],
)
def test_params_from_center_reports_inequality(center, failed):
    with pytest.raises(OutsideMedialTriangleError) as info:
        params_from_center(TriangleLegs(2, 2), Point(*center))
    assert info.value.inequality == failed


def test_medial_boundary_rejected():
    with pytest.raises(OutsideMedialTriangleError):
        params_from_center(TriangleLegs(2, 2), Point(1, 1))


@pytest.mark.parametrize("w, t", [(0, 0.5), (1, 0.5), (0.5, 0), (0.5, 1.2)])
def test_params_outside_square_rejected(w, t):
    with pytest.raises(ValueError):
        InscriptionParams.of(1, 1, w, t)


def test_inscribed_conic_worked_example(worked_ellipse):
    conic = inscribed_conic(InscriptionParams.of(6, 8, 0.25, 2 / 3))
    ref = conic_from_tangent_ellipse(worked_ellipse)
    assert conic.as_tuple() == pytest.approx(ref.as_tuple(), rel=1e-14)
    assert is_nondegenerate_ellipse(conic)


def test_inscribed_conic_symmetric_is_not_a_circle():
    conic = inscribed_conic(InscriptionParams.of(2, 2, 0.5, 0.5))
    assert conic.as_tuple() == pytest.approx((1, 1, 0.5, -1, -1, 1))
    assert conic.quadratic_part_det() > 0
    tang = tangency_points(InscriptionParams.of(2, 2, 0.5, 0.5))
    for p in tang:
        assert evaluate(conic, p) == pytest.approx(0, abs=1e-15)


def test_tangency_worked_example():
    tang = tangency_points(InscriptionParams.of(6, 8, 0.25, 2 / 3))
    assert tang.t1 == pytest.approx((4, 0))
    assert tang.t2 == pytest.approx((0, 2))
    assert tang.t3 == pytest.approx((36 / 7, 8 / 7), rel=1e-14)


def test_tangency_from_rounded_second_ladder():
    # the rounded parameters quoted for the second ladder reproduce the quoted point
    tang = tangency_points(InscriptionParams.of(9.35, 3.57, 0.56, 0.43))
    assert tang.t3 == pytest.approx((3.48, 2.24), abs=5e-3)


def test_tangency_symmetric():
    tang = tangency_points(InscriptionParams.of(2, 2, 0.5, 0.5))
    assert (tang.t1, tang.t2, tang.t3) == ((1, 0), (0, 1), (1, 1))
    assert tang.t3.x / 2 + tang.t3.y / 2 == 1


def test_nondegenerate_examples():
    assert not is_nondegenerate_ellipse(ConicCoeffs(1, 1, 1, 0, 0, 0))
    assert not is_nondegenerate_ellipse(ConicCoeffs(1, 1, 0, 0, 0, 0))
    assert not is_nondegenerate_ellipse(ConicCoeffs(1, 1, 0, 0, 0, 1))  # no real points
    assert is_nondegenerate_ellipse(ConicCoeffs(1, 1, 0, 0, 0, -1))
    assert is_nondegenerate_ellipse(ConicCoeffs(-1, -1, 0, 0, 0, 1))


@given(params())
def test_round_trip(p):
    w, t = params_from_center(p.legs, center_from_params(p))
    assert w == pytest.approx(p.w, rel=1e-10)
    assert t == pytest.approx(p.t, rel=1e-10)


@given(params())
def test_center_in_medial_triangle_and_interior(p):
    u, v = p.legs.u, p.legs.v
    x, y = center_from_params(p)
    assert 0 < x < u / 2
    assert v / 2 - v / u * x < y < v / 2
    assert evaluate(inscribed_conic(p), Point(x, y)) < 0


@given(params())
def test_tangencies_on_conic_and_sides(p):
    conic = inscribed_conic(p)
    tang = tangency_points(p)
    for q in tang:
        assert abs(evaluate(conic, q)) <= 1e-9 * conic.term_scale(q)
    u, v = p.legs.u, p.legs.v
    assert tang.t1 == (u * p.t, 0) and tang.t2 == (0, v * p.w)
    assert tang.t3.x > 0 and tang.t3.y > 0
    assert tang.t3.x / u + tang.t3.y / v == pytest.approx(1, abs=1e-12)


@given(params())
def test_slopes_at_tangencies(p):
    conic = inscribed_conic(p)
    tang = tangency_points(p)
    u, v = p.legs.u, p.legs.v
    assert _slope(conic, tang.t1) == pytest.approx(0, abs=1e-9)
    assert _slope(conic, tang.t3) == pytest.approx(-v / u, rel=1e-9, abs=1e-9)
    gx, gy = conic.gradient(tang.t2)
    assert abs(gy) <= 1e-9 * abs(gx)
    assert gx != 0


@given(params(), st.floats(0.05, 0.95), st.floats(0.05, 0.95))
def test_closed_form_slope_agrees_with_implicit(p, fx, fy):
    conic = inscribed_conic(p)
    for q in (tangency_points(p).t1, tangency_points(p).t3, Point(fx * p.legs.u, fy * p.legs.v)):
        gx, gy = conic.gradient(q)
        den_ok = abs(gy) > 1e-6 * conic.term_scale(q) / max(p.legs.u, p.legs.v)
        if den_ok:
            assert _closed_form_slope(p, *q) == pytest.approx(-gx / gy, rel=1e-7, abs=1e-9)


@given(params())
def test_discriminants(p):
    conic = inscribed_conic(p)
    assert is_nondegenerate_ellipse(conic)
    u, v, w, t = p.legs.u, p.legs.v, p.w, p.t
    expected = 4 * (u * v * w * t) ** 2 * (1 - w) * (1 - t) * ((1 - t) * w + t)
    assert conic.quadratic_part_det() == pytest.approx(expected, rel=1e-9)


@given(params())
def test_matches_axis_tangent_form(p):
    u, v, w, t = p.legs.u, p.legs.v, p.w, p.t
    c, d = u * t, v * w
    cross = c * d * (2 * w + 2 * t - 2 * w * t - 1)
    ref = conic_from_tangent_ellipse(TangentEllipse(c, d, cross)).as_tuple()
    got = inscribed_conic(p).as_tuple()
    k = got[0] / ref[0]
    assert k > 0
    assert got == pytest.approx([k * r for r in ref], rel=1e-9, abs=1e-12 * max(map(abs, got)))
    assert 0 < w + t - w * t < 1

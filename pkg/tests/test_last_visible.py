import pytest
from hypothesis import given
from hypothesis import strategies as st

from contiguous_gallery import fixtures
from contiguous_gallery.errors import InconsistentInput
from contiguous_gallery.exact_num import lerp, orient_sign, point, rational
from contiguous_gallery.feasible_region import feasible_region
from contiguous_gallery.greedy_solver import _METHODS, greedy_interval
from contiguous_gallery.last_visible import (blocking_corners, blocking_vertex, build_blocking_polygon,
                                             common_tangents, last_visible_point_ref,
                                             last_visible_point_tangent, tangent_frame)
from contiguous_gallery.polygon_model import BoundaryPoint
from contiguous_gallery.region import Region, intersect
from contiguous_gallery.verify_bench import random_polygon
from contiguous_gallery.visibility import visibility_region

METHODS = [last_visible_point_ref, last_visible_point_tangent]


def _comb_case(comb):
    # the chain from the tip of the right prong has absorbed the bottom edge
    F = feasible_region(comb, [point(0, 3), point(0, 0), point(-5, 0)])
    return F, 1


@pytest.mark.parametrize("lvp", METHODS)
def test_comb_left_wall(comb, lvp):
    F, e = _comb_case(comb)
    res = lvp(comb, F, e)
    assert comb.point_at(res.point) == point(-5, "7/5")
    assert res.guard == point("-3/2", 0)


@pytest.mark.parametrize("lvp", METHODS)
def test_single_guard_ray_cast(l_shape, lvp):
    # from (3/2, 0) the reflex corner (1, 1) cuts the top edge at x = 1/2
    g = point("3/2", 0)
    e = next(i for i, (a, b) in enumerate(l_shape.edges) if (a, b) == (point(0, 2), point(1, 2)))
    res = lvp(l_shape, Region.from_convex([g]), e)
    y = l_shape.point_at(res.point)
    assert y == point("1/2", 2)
    assert res.guard == g
    assert blocking_vertex(l_shape, g, y) == point(1, 1)


@pytest.mark.parametrize("lvp", METHODS)
def test_blocking_demo(lvp):
    poly, reg, e = fixtures.blocking_demo()
    res = lvp(poly, Region.from_polygon(reg), e)
    assert res.point == BoundaryPoint(e, rational("5/6"))
    assert poly.point_at(res.point) == point("3/2", 1)
    assert res.guard == point("7/2", 3)
    # guard, blocking corner and last visible point are collinear
    c = blocking_vertex(poly, res.guard, point("3/2", 1))
    assert c is not None and orient_sign(res.guard, c, point("3/2", 1)) == 0


def test_blocking_demo_with_traced_outline():
    poly, reg, e = fixtures.blocking_demo()
    F = Region.from_polygon(reg)
    assert last_visible_point_tangent(poly, F, e, outline=True) == last_visible_point_ref(poly, F, e)


def test_blocking_corners_lie_in_congested_triangle():
    poly, reg, e = fixtures.blocking_demo()
    fr = tangent_frame(poly, Region.from_polygon(reg), e)
    corners = blocking_corners(poly, fr)
    assert point(1, 3) in [poly.vertices[i] for i in corners]
    for i in range(poly.n):
        v = poly.vertices[i]
        s = [orient_sign(fr.a, fr.b, v), orient_sign(fr.b, fr.q, v), orient_sign(fr.q, fr.a, v)]
        assert (i in corners) == (not (max(s) > 0 and min(s) < 0))


def test_blocking_demo_outline():
    poly, reg, e = fixtures.blocking_demo()
    B = build_blocking_polygon(poly, Region.from_polygon(reg), e)
    traced = [p for p, tag in zip(B.boundary, B.edge_tags) if tag != "synthetic"]
    assert traced[:4] == [point(1, 1), point("742773/800000", "3/2"), point(2, "3/2"), point("3/2", "5/2")]
    assert point(1, 3) in B.boundary
    assert B.contact == point(1, 4)
    # every polygon vertex on B lies in the congested triangle
    fr = B.frame
    for p in B.boundary:
        if p in poly.vertices:
            s = [orient_sign(fr.a, fr.b, p), orient_sign(fr.b, fr.q, p), orient_sign(fr.q, fr.a, p)]
            assert not (max(s) > 0 and min(s) < 0)


def test_common_tangents_of_two_squares():
    left = [point(0, 0), point(1, 0), point(1, 1), point(0, 1)]
    right = [point(2, 0), point(3, 0), point(3, 1), point(2, 1)]
    lines = common_tangents(left, right)
    assert len(lines) == 4


def test_shared_supporting_line_reported_once():
    t1 = [point(0, 0), point(1, 0), point(0, 1)]
    t2 = [point(3, 0), point(4, 0), point(4, 1)]
    lines = common_tangents(t1, t2)
    on_axis = [l for l in lines if all(p[1] == 0 for p in l)]
    assert len(on_axis) == 1


def test_precondition_checks(comb):
    F, e = _comb_case(comb)
    with pytest.raises(InconsistentInput):
        last_visible_point_ref(comb, Region(), e)
    # a region that already sees the far end is rejected
    with pytest.raises(InconsistentInput):
        last_visible_point_ref(comb, visibility_region(comb, point(-5, 3)), e)


def _last_visible_oracle(poly, F, e, start):
    """Bisection over the edge on feasible-region emptiness, to 2^-40 of its length."""
    a, b = poly.edge(e)
    a = start or a
    lo, hi = rational(0), rational(1)
    for _ in range(40):
        mid = (lo + hi) / 2
        if intersect(F, visibility_region(poly, lerp(a, b, mid))).is_empty:
            hi = mid
        else:
            lo = mid
    return a, b, lo, hi


@given(st.integers(5, 12), st.integers(0, 10**6), st.integers(0, 11), st.integers(0, 6))
def test_matches_bisection_oracle(n, seed, edge, frac):
    poly = random_polygon(n, seed, bits=8)
    x = BoundaryPoint(edge % n, rational(frac) / 7)
    seen = []

    def spy(poly_, F, e, start=None, **kw):
        seen.append((F, e, start))
        return last_visible_point_ref(poly_, F, e, start, **kw)

    _METHODS["spy"] = spy
    try:
        greedy_interval(poly, x, method="spy")
    finally:
        del _METHODS["spy"]
    for F, e, start in seen:
        ref = last_visible_point_ref(poly, F, e, start)
        a, b, lo, hi = _last_visible_oracle(poly, F, e, start)
        y = poly.point_at(ref.point)
        # the answer is visible from F and sits inside the oracle's final bracket
        assert not intersect(F, visibility_region(poly, y)).is_empty
        assert lerp(a, b, lo) == y or _between(lerp(a, b, lo), y, lerp(a, b, hi))
        assert last_visible_point_tangent(poly, F, e, start) == ref


def _between(p, y, q):
    return (min(p[0], q[0]) <= y[0] <= max(p[0], q[0])) and (min(p[1], q[1]) <= y[1] <= max(p[1], q[1]))

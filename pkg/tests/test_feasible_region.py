from hypothesis import given
from hypothesis import strategies as st

from contiguous_gallery import convex
from contiguous_gallery.exact_num import point, rational
from contiguous_gallery.feasible_region import (IntervalSpec, feasible_region, interval_targets,
                                                kernel_nonempty)
from contiguous_gallery.polygon_model import BoundaryInterval, BoundaryPoint
from contiguous_gallery.region import (EMPTY, Region, RegionKind, intersect, is_connected,
                                       region_vertex_count)
from contiguous_gallery.verify_bench import random_polygon
from contiguous_gallery.visibility import sees

from oracles import sees_oracle


def unit_square(dx, dy):
    return Region.from_convex([point(dx, dy), point(dx + 1, dy), point(dx + 1, dy + 1), point(dx, dy + 1)])


def test_edge_contact_is_a_segment():
    r = intersect(unit_square(0, 0), unit_square(1, 0))
    assert r.kind is RegionKind.SEGMENT_CHAIN
    assert set(r.shapes[0]) == {point(1, 0), point(1, 1)}


def test_corner_contact_is_a_point():
    r = intersect(unit_square(0, 0), unit_square(1, 1))
    assert r.kind is RegionKind.SINGLE_POINT
    assert r.points() == [point(1, 1)]


def test_triangle_and_its_mirror_over_the_centroid_line():
    tri = Region.from_convex([point(0, 0), point(2, 0), point(1, 2)])
    c = rational("2/3")  # height of the centroid
    mirror = Region.from_convex([point(0, 2 * c), point(2, 2 * c), point(1, 2 * c - 2)])
    r = intersect(tri, mirror)
    assert r.kind is RegionKind.AREA
    assert region_vertex_count(r) == 6
    # point reflection through the centroid: the overlap is two thirds of the triangle
    assert abs(sum(convex.doubled_area(s) for s in r.shapes)) == 2 * rational("4/3")


def test_triangle_and_its_mirror_over_mid_height_is_a_rhombus():
    tri = Region.from_convex([point(0, 0), point(2, 0), point(1, 2)])
    mirror = Region.from_convex([point(0, 2), point(2, 2), point(1, 0)])
    r = intersect(tri, mirror)
    assert set(r.points()) == {point(1, 0), point("3/2", 1), point(1, 2), point("1/2", 1)}
    assert region_vertex_count(r) == 4


def test_square_kernel_is_whole_square(square):
    F = feasible_region(square, square.vertices)
    assert region_vertex_count(F) == 4
    assert set(F.points()) == set(square.vertices)
    assert kernel_nonempty(square) is not None


def test_comb_tips_need_two_guards(comb):
    assert feasible_region(comb, [point(0, 3), point(-5, 3)]).is_empty
    F = feasible_region(comb, [point(0, 3), point(0, "1.4")])
    assert F.contains(point("-3/2", 0))


def test_comb_tips_grid_oracle(comb):
    # no grid point inside the comb sees both tips
    for i in range(-50, 1):
        for j in range(0, 31):
            g = point(rational(i) / 10, rational(j) / 10)
            if comb.contains(g):
                assert not (sees(comb, g, point(0, 3)) and sees(comb, g, point(-5, 3)))


def test_kernel_absent_for_non_star_fixtures(comb, four_guard_cross, six_guard_pinwheel):
    assert kernel_nonempty(comb) is None
    assert kernel_nonempty(four_guard_cross) is None
    assert kernel_nonempty(six_guard_pinwheel) is None


def test_empty_region_has_no_corners():
    assert region_vertex_count(EMPTY) == 0


def test_interval_targets(square):
    iv = BoundaryInterval(BoundaryPoint(3, rational("1/2")), BoundaryPoint(1, rational("1/2")))
    pts = interval_targets(square, iv)
    assert pts == [point(2, 0), square.vertices[0], square.vertices[1], point(2, 4)]
    assert feasible_region(square, IntervalSpec(interval=iv)) == feasible_region(square, pts)


@given(st.integers(5, 14), st.integers(0, 10**6), st.data())
def test_feasible_regions_connected_and_small(n, seed, data):
    poly = random_polygon(n, seed, bits=8)
    e = data.draw(st.integers(0, n - 1))
    length = data.draw(st.integers(1, n - 1))
    iv = BoundaryInterval(BoundaryPoint(e, rational(0)), BoundaryPoint((e + length) % n, rational(0)))
    F = feasible_region(poly, iv)
    assert is_connected(F)
    assert region_vertex_count(F) <= 3 * n
    targets = interval_targets(poly, iv)
    for g in F.points():
        assert all(sees_oracle(poly, g, t) for t in targets)

import json

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from contiguous_gallery.errors import (DuplicateConsecutiveVertex, MalformedDocument, MalformedNumber,
                                       NotSimple, TooFewVertices)
from contiguous_gallery.exact_num import ZERO, point
from contiguous_gallery.polygon_model import (BoundaryInterval, BoundaryPoint, Closure, Polygon,
                                              boundary_cmp, doubled_area, edges_in_interval,
                                              interval_contains, make_polygon, parse_polygon)
from contiguous_gallery.verify_bench import random_polygon

HALF = mpq(1, 2)


def v(i):
    return BoundaryPoint(i, ZERO)


def test_counterclockwise_input_is_stored_clockwise(square):
    assert square.n == 4
    assert doubled_area(square.vertices) < 0
    assert set(square.vertices) == {point(0, 0), point(4, 0), point(4, 4), point(0, 4)}
    assert square.vertices[0] == point(0, 0)


def test_clockwise_input_is_kept():
    cw = make_polygon([(0, 0), (0, 4), (4, 4), (4, 0)])
    assert cw.vertices == make_polygon([(0, 0), (4, 0), (4, 4), (0, 4)]).vertices


def test_bowtie_is_not_simple():
    with pytest.raises(NotSimple):
        make_polygon([(0, 0), (2, 2), (2, 0), (0, 2)])


def test_comb_accepted(comb):
    assert comb.n == 8
    assert sum(comb.reflex) == 2


@pytest.mark.parametrize("coords,err", [
    ([(0, 0), (1, 0)], TooFewVertices),
    ([(0, 0), (1, 0), (1, 0), (0, 1)], DuplicateConsecutiveVertex),
    ([(0, 0), (2, 0), (1, 0)], NotSimple),
])
def test_invalid_polygons(coords, err):
    with pytest.raises(err):
        make_polygon(coords)


def test_parse_polygon_document():
    poly = parse_polygon('{"vertices": [["0", "0"], [4, 0], ["4", "1/2"]]}')
    assert poly.n == 3 and point(4, HALF) in poly.vertices
    with pytest.raises(MalformedNumber):
        parse_polygon({"vertices": [[0.5, 0], [1, 0], [0, 1]]})
    with pytest.raises(MalformedDocument):
        parse_polygon("[1, 2")
    with pytest.raises(MalformedDocument):
        parse_polygon({"points": []})


def test_json_round_trip(comb):
    assert parse_polygon(comb.to_json()) == comb
    assert json.loads(comb.to_json())["vertices"][2] == ["-5", "3"]


def test_boundary_cmp_examples(square):
    assert boundary_cmp(v(0), v(1), v(2)) == -1
    assert boundary_cmp(v(2), v(1), v(3)) == 1
    mid0 = BoundaryPoint(0, HALF)
    assert boundary_cmp(mid0, v(0), v(1)) == 1
    assert boundary_cmp(mid0, v(1), v(1)) == 0


def test_interval_contains_examples():
    assert interval_contains(BoundaryInterval(v(0), v(2)), v(1))
    assert not interval_contains(BoundaryInterval(v(0), v(1), Closure.OPEN_LEFT), v(0))
    assert interval_contains(BoundaryInterval(v(3), v(1)), v(0))
    assert not interval_contains(BoundaryInterval(v(3), v(1)), v(2))


def test_edges_in_interval_examples():
    assert edges_in_interval(BoundaryInterval(v(0), v(1)), 4) == 1
    assert edges_in_interval(BoundaryInterval(BoundaryPoint(0, HALF), BoundaryPoint(1, HALF)), 4) == 2
    assert edges_in_interval(BoundaryInterval(v(0), v(0)), 4) == 0
    assert edges_in_interval(BoundaryInterval(BoundaryPoint(3, HALF), BoundaryPoint(0, HALF)), 4) == 2


def test_point_at_and_locate(square):
    bp = BoundaryPoint(0, mpq(1, 4))
    p = square.point_at(bp)
    assert p == point(0, 1)
    assert square.locate(p) == bp
    assert square.locate(point(2, 2)) is None


def test_contains(comb):
    assert comb.contains(point(-3, "1/2"))
    assert comb.contains(point(0, 2))  # on the boundary
    assert not comb.contains(point(-2, 2))  # the notch between the two prongs
    assert comb.contains_strictly(point(-3, "1/2"))
    assert not comb.contains_strictly(point(0, 2))


def test_triangulation_covers_area(comb):
    total = sum(abs(doubled_area(t)) for t in comb.triangles)
    assert total == abs(doubled_area(comb.vertices))
    assert len(comb.triangles) == comb.n - 2


@given(st.integers(3, 14), st.integers(0, 10**6))
def test_random_polygons_are_simple(n, seed):
    poly = random_polygon(n, seed)
    assert poly.n == n
    assert doubled_area(poly.vertices) < 0
    Polygon(poly.vertices)  # validation passes


@given(st.integers(0, 3), st.fractions(0, 1).filter(lambda f: f < 1),
       st.integers(0, 3), st.fractions(0, 1).filter(lambda f: f < 1))
def test_boundary_cmp_antisymmetric(e1, s1, e2, s2):
    a = BoundaryPoint(e1, mpq(s1.numerator, s1.denominator))
    b = BoundaryPoint(e2, mpq(s2.numerator, s2.denominator))
    for origin in (v(0), BoundaryPoint(2, HALF)):
        assert boundary_cmp(origin, a, b) == -boundary_cmp(origin, b, a)

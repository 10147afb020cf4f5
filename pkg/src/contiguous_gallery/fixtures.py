"""Hand-made polygons with known optima, used by tests, demos and the CLI.

Decimal coordinates are read as exact rationals, so ``"0.8"`` is ``4/5``.
"""

from __future__ import annotations

from .polygon_model import Polygon, make_polygon


def square(size: int = 4) -> Polygon:
    return make_polygon([(0, 0), (size, 0), (size, size), (0, size)])


def l_shape() -> Polygon:
    return make_polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])


def comb() -> Polygon:
    """Two slots separated by a tooth; a guard on the bottom edge trades one slot for the other."""
    return make_polygon([(0, 0), (-5, 0), (-5, 3), (-4, 3), (-4, 1), (-1, 1), (-1, 3), (0, 3)])


_TWO_GUARD_ROOM = {
    "A": (0, 10), "B": (12, 10), "C": (12, 0), "D": (0, 0),
    "E": ("2.24", "9.2"), "F": (2, "7.5"), "G": ("9.76", "9.2"), "H": ("2.24", "0.8"),
    "I": ("9.76", "0.8"), "J": (10, "7.5"), "K": (10, "2.5"), "L": (2, "2.5"),
    "M": (14, "8.34"), "N": (-2, "8.34"), "Q": (14, "1.67"), "R": (-2, "1.67"),
    "X": (6, 10), "Y": (6, 0),
}

TWO_GUARD_ROOM_GUARDS = ((-2, 5), (14, 5))


_ROOM_ORDER = "XBGJMQKICYDHLRNFEA"


def two_guard_room() -> Polygon:
    """Room with two side bays; two guards on the bay walls cover everything.

    The bay corners sit where the sight lines from (-2, 5) and (14, 5)
    through the bay mouths meet the far walls, at heights 25/3 and 5/3.
    Restricting guards to vertices needs four.
    """
    coords = dict(_TWO_GUARD_ROOM)
    coords.update({"M": (14, "25/3"), "N": (-2, "25/3"), "Q": (14, "5/3"), "R": (-2, "5/3")})
    return make_polygon([coords[c] for c in _ROOM_ORDER])


def two_guard_room_rounded() -> Polygon:
    """Same room with the bay corners rounded to two decimals (8.34, 1.67).

    The rounding lifts the corners just out of the guards' sight lines, and
    the optimum becomes three.
    """
    return make_polygon([_TWO_GUARD_ROOM[c] for c in _ROOM_ORDER])


_PINWHEEL = [
    ("0.8", "0.3"), ("1.8", "-0.2"), ("2.5", "0.0"), ("1.7", "1.6"), ("2.0", "0.5"),
    ("0.9301208850715019", "0.5172240161046361"), ("1.345427755869507", "1.210537978279261"),
    ("0.6333609120801347", "1.2220015638506319"), ("0.37268901556668577", "0.5261981285661453"),
    ("-0.6598076211353314", "0.5428203230275511"), ("-0.7267949192431118", "1.6588457268119896"),
    ("-1.2499999999999996", "2.165063509461097"), ("-2.235640646055102", "0.672243186433546"),
    ("-1.433012701892219", "1.4820508075688776"),
    ("-0.9129895799297773", "0.546896307010069"), ("-1.721070519370448", "0.5599056264000507"),
    ("-1.3749648537990262", "-0.06249414229983674"), ("-0.6420454545454548", "0.05965909090909144"),
    ("-0.14019237886466884", "-0.8428203230275508"), ("-1.0732050807568885", "-1.458845726811989"),
    ("-1.250000000000001", "-2.165063509461096"), ("0.5356406460551006", "-2.272243186433546"),
    ("-0.5669872981077817", "-1.982050807568877"),
    ("-0.017131305141725006", "-1.064120323114705"), ("0.3756427635009406", "-1.7704436046793115"),
    ("0.7416039417188911", "-1.1595074215507952"), ("0.26935643897876876", "-0.5858572194752367"),
]


def six_guard_pinwheel() -> Polygon:
    """Three-armed pinwheel: three guards see every edge, but contiguous chains need six."""
    return make_polygon(_PINWHEEL)


def _quadrant(sx: int, sy: int):
    base = [(1, 1), ("0.8", "1.4"), ("1.4", "1.4"), (2, 1), (2, "0.8"),
            ("2.4", "0.95"), ("2.4", "0.5"), (2, "0.4")]
    from .exact_num import rational
    return [(sx * rational(x), sy * rational(y)) for x, y in base]


def four_guard_cross() -> Polygon:
    """Symmetric polygon where three point guards see everything but contiguous chains need four."""
    rt, rb = _quadrant(1, 1), _quadrant(1, -1)
    lt, lb = _quadrant(-1, 1), _quadrant(-1, -1)
    # walk: top-left A..H, down to bottom-left H..A, across to bottom-right A..H,
    # up to top-right H..A, and back across the top
    cycle = lt + lb[::-1] + rb + rt[::-1]
    return make_polygon(cycle)


def blocking_demo() -> tuple[Polygon, list, int]:
    """Polygon, feasible region and failing edge exercising the blocking-polygon trace.

    The failing edge runs from (4, 1) to (1, 1); the region is the convex-ish
    decagon that sees (4, 1) but not (1, 1).
    """
    from .exact_num import point
    poly = make_polygon([
        (4, 1), (1, 1), ("0.5", "1.5"), (2, "1.5"), ("1.5", "2.5"), ("0.5", 2), (1, 2),
        (0, "1.5"), (0, "2.5"), (1, 3), (1, 4), ("0.5", "4.5"), (0, "4.5"), (0, 5),
        (0, 6), (5, 6), (5, 0),
    ])
    region = [point(x, y) for x, y in [
        ("3.5", 3), (2, "3.5"), (1, 4), ("0.5", "4.5"), ("0.42773", 5), ("1.5", 5),
        (2, "4.5"), (3, 5), ("3.5", 5), (4, 4)]]
    edge = poly.vertices.index(point(4, 1))
    return poly, region, edge


ALL = {
    "square": square,
    "l_shape": l_shape,
    "comb": comb,
    "two_guard_room": two_guard_room,
    "two_guard_room_rounded": two_guard_room_rounded,
    "six_guard_pinwheel": six_guard_pinwheel,
    "four_guard_cross": four_guard_cross,
}

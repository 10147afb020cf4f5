"""Simple polygons, boundary coordinates and circular boundary intervals.

A polygon is stored clockwise, so the interior lies to the right of every
directed edge ``v[i] -> v[i+1]``.  A point on the boundary is addressed as
``BoundaryPoint(edge, s)`` meaning ``(1 - s) v[edge] + s v[edge+1]`` with
``0 <= s < 1``; its *position* ``edge + s`` increases clockwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from gmpy2 import mpq

from .errors import (
    DuplicateConsecutiveVertex,
    MalformedDocument,
    MalformedNumber,
    NotSimple,
    TooFewVertices,
)
from .exact_num import ONE, ZERO, Point, format_rational, lerp, orient_sign, rational, segment_contains


class BoundaryPoint(NamedTuple):
    edge: int
    s: mpq

    @property
    def position(self) -> mpq:
        return self.edge + self.s

    @property
    def is_vertex(self) -> bool:
        return self.s == 0

    def __str__(self) -> str:
        return f"[{self.edge}, {format_rational(self.s)}]"


class Closure(Enum):
    CLOSED = "closed"
    OPEN_LEFT = "half-open-left"
    OPEN_RIGHT = "half-open-right"
    OPEN = "open"


@dataclass(frozen=True)
class BoundaryInterval:
    """Clockwise chain of the boundary from ``start`` to ``end``."""

    start: BoundaryPoint
    end: BoundaryPoint
    closure: Closure = Closure.CLOSED


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments ab and cd share at least one point."""
    o1 = orient_sign(a, b, c)
    o2 = orient_sign(a, b, d)
    o3 = orient_sign(c, d, a)
    o4 = orient_sign(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return ((o1 == 0 and segment_contains(a, b, c)) or (o2 == 0 and segment_contains(a, b, d))
            or (o3 == 0 and segment_contains(c, d, a)) or (o4 == 0 and segment_contains(c, d, b)))


def segments_cross(a, b, c, d) -> bool:
    """The segments cross at a single point interior to both."""
    o1 = orient_sign(a, b, c)
    o2 = orient_sign(a, b, d)
    if o1 * o2 >= 0:
        return False
    o3 = orient_sign(c, d, a)
    o4 = orient_sign(c, d, b)
    return o3 * o4 < 0


def doubled_area(points: Sequence[Point]) -> mpq:
    """Twice the signed area; negative for clockwise order."""
    total = ZERO
    m = len(points)
    for i in range(m):
        x0, y0 = points[i]
        x1, y1 = points[(i + 1) % m]
        total += x0 * y1 - x1 * y0
    return total


def find_self_intersection(points: Sequence[Point]) -> tuple[int, int] | None:
    """First pair of edges violating simplicity, by exhaustive comparison."""
    m = len(points)
    edges = [(points[i], points[(i + 1) % m]) for i in range(m)]
    for i in range(m):
        a, b = edges[i]
        for j in range(i + 1, m):
            c, d = edges[j]
            if j == i + 1 or (i == 0 and j == m - 1):
                # adjacent edges: they may only share the common vertex
                shared, p, q = (b, a, d) if j == i + 1 else (a, b, c)
                if m == 3 and orient_sign(a, b, d if j == i + 1 else c) == 0:
                    return (i, j)
                if segment_contains(shared, p, q) or segment_contains(shared, q, p):
                    return (i, j)
                continue
            if segments_intersect(a, b, c, d):
                return (i, j)
    return None


class Polygon:
    """An immutable simple polygon with clockwise vertex order."""

    __slots__ = ("vertices", "n", "__dict__")

    def __init__(self, points: Iterable[Point], *, validate: bool = True):
        pts = [p if isinstance(p, Point) else Point(rational(p[0]), rational(p[1])) for p in points]
        if validate:
            if len(pts) < 3:
                raise TooFewVertices(f"polygon needs at least 3 vertices, got {len(pts)}")
            for i in range(len(pts)):
                if pts[i] == pts[(i + 1) % len(pts)]:
                    raise DuplicateConsecutiveVertex(f"vertex {i} repeats at {(i + 1) % len(pts)}")
            bad = find_self_intersection(pts)
            if bad is not None:
                raise NotSimple(*bad)
        if doubled_area(pts) > 0:
            pts = [pts[0]] + pts[:0:-1]
        self.vertices: tuple[Point, ...] = tuple(pts)
        self.n = len(pts)

    def __repr__(self) -> str:
        return f"Polygon({[str(v) for v in self.vertices]})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __getstate__(self):
        return {"vertices": self.vertices}

    def __setstate__(self, state):
        self.vertices = state["vertices"]
        self.n = len(self.vertices)

    def vertex(self, i: int) -> Point:
        return self.vertices[i % self.n]

    def edge(self, i: int) -> tuple[Point, Point]:
        return self.vertices[i % self.n], self.vertices[(i + 1) % self.n]

    @cached_property
    def edges(self) -> tuple[tuple[Point, Point], ...]:
        return tuple(self.edge(i) for i in range(self.n))

    @cached_property
    def bit_size(self) -> int:
        """Total bit size of the vertex coordinates, the N of the bit-growth bounds."""
        from .exact_num import point_bits
        return sum(point_bits(v) for v in self.vertices)

    @cached_property
    def reflex(self) -> tuple[bool, ...]:
        """True where the interior angle exceeds pi (left turn in clockwise order)."""
        v = self.vertices
        n = self.n
        return tuple(orient_sign(v[i - 1], v[i], v[(i + 1) % n]) > 0 for i in range(n))

    # boundary coordinates -------------------------------------------------

    def boundary_point(self, edge: int, s=ZERO) -> BoundaryPoint:
        s = rational(s)
        edge %= self.n
        if s == ONE:
            return BoundaryPoint((edge + 1) % self.n, ZERO)
        if not ZERO <= s < ONE:
            raise ValueError(f"boundary parameter {s} outside [0, 1]")
        return BoundaryPoint(edge, s)

    def vertex_point(self, i: int) -> BoundaryPoint:
        return BoundaryPoint(i % self.n, ZERO)

    def point_at(self, bp: BoundaryPoint) -> Point:
        a, b = self.edge(bp.edge)
        if bp.s == 0:
            return a
        return lerp(a, b, bp.s)

    def from_position(self, position) -> BoundaryPoint:
        position = rational(position)
        whole = int(position // 1)
        return BoundaryPoint(whole % self.n, position - whole)

    def locate(self, p: Point) -> BoundaryPoint | None:
        """Boundary coordinates of ``p`` or ``None`` when ``p`` is not on the boundary."""
        for i, (a, b) in enumerate(self.edges):
            if p == a:
                return BoundaryPoint(i, ZERO)
            if segment_contains(a, b, p):
                if p == b:
                    return BoundaryPoint((i + 1) % self.n, ZERO)
                dx = b[0] - a[0]
                s = (p[0] - a[0]) / dx if dx != 0 else (p[1] - a[1]) / (b[1] - a[1])
                return BoundaryPoint(i, s)
        return None

    def on_boundary(self, p: Point) -> bool:
        return any(segment_contains(a, b, p) for a, b in self.edges)

    def contains(self, p: Point) -> bool:
        """Closed point-in-polygon test."""
        px, py = p
        inside = False
        for a, b in self.edges:
            ax, ay = a
            bx, by = b
            if (ay > py) != (by > py):
                c = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
                if c == 0:
                    return True
                if (c > 0) == (by > ay):
                    inside = not inside
            elif ay == py == by and min(ax, bx) <= px <= max(ax, bx):
                return True
            elif (ay == py and ax == px) or (by == py and bx == px):
                return True
        return inside

    def contains_strictly(self, p: Point) -> bool:
        return self.contains(p) and not self.on_boundary(p)

    # triangulation ---------------------------------------------------------

    @cached_property
    def triangles(self) -> tuple[tuple[Point, Point, Point], ...]:
        """Ear-clipping triangulation; every triangle is listed counterclockwise."""
        return tuple((self.vertices[i], self.vertices[j], self.vertices[k])
                     for i, j, k in self.triangle_indices)

    @cached_property
    def triangle_indices(self) -> tuple[tuple[int, int, int], ...]:
        v = self.vertices
        idx = list(range(self.n))
        out: list[tuple[int, int, int]] = []
        while len(idx) > 3:
            m = len(idx)
            for pos in range(m):
                i, j, k = idx[pos - 1], idx[pos], idx[(pos + 1) % m]
                # clockwise polygon: a convex corner turns right
                if orient_sign(v[i], v[j], v[k]) >= 0:
                    continue
                if any(_in_closed_triangle(v[i], v[j], v[k], v[t])
                       for t in idx if t not in (i, j, k)):
                    continue
                out.append((k, j, i))
                del idx[pos]
                break
            else:
                raise RuntimeError("ear clipping found no ear; polygon is not simple")
        i, j, k = idx
        if orient_sign(v[i], v[j], v[k]) < 0:
            out.append((k, j, i))
        elif orient_sign(v[i], v[j], v[k]) > 0:
            out.append((i, j, k))
        return tuple(out)

    # serialisation ---------------------------------------------------------

    def to_document(self) -> dict:
        return {"vertices": [[format_rational(x), format_rational(y)] for x, y in self.vertices]}

    def to_json(self) -> str:
        return json.dumps(self.to_document())


def _in_closed_triangle(a, b, c, p) -> bool:
    o1 = orient_sign(a, b, p)
    o2 = orient_sign(b, c, p)
    o3 = orient_sign(c, a, p)
    return not ((o1 > 0 or o2 > 0 or o3 > 0) and (o1 < 0 or o2 < 0 or o3 < 0))


def make_polygon(coords: Iterable[Sequence]) -> Polygon:
    """Validated polygon from coordinate pairs in either orientation."""
    return Polygon([Point(rational(x), rational(y)) for x, y in coords])


def parse_polygon(document) -> Polygon:
    """Parse a polygon document (JSON text or an already decoded mapping)."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise MalformedDocument(f"invalid JSON: {exc}") from exc
    if not isinstance(document, dict) or "vertices" not in document:
        raise MalformedDocument('expected an object with a "vertices" list')
    raw = document["vertices"]
    if not isinstance(raw, list):
        raise MalformedDocument('"vertices" must be a list')
    coords = []
    for item in raw:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise MalformedDocument(f"vertex {item!r} is not a coordinate pair")
        x, y = item
        for value in (x, y):
            if isinstance(value, float) or not isinstance(value, (str, int)) or isinstance(value, bool):
                raise MalformedNumber(f"coordinate {value!r} must be a string rational or integer")
        coords.append((x, y))
    return make_polygon(coords)


# circular order ----------------------------------------------------------------


def _offset_key(origin: BoundaryPoint, p: BoundaryPoint) -> tuple[int, mpq]:
    # points at or after origin come first, then the wrapped ones
    pos = p.position
    return (0 if pos >= origin.position else 1, pos)


def boundary_cmp(origin: BoundaryPoint, a: BoundaryPoint, b: BoundaryPoint) -> int:
    """-1 if ``a`` comes before ``b`` walking clockwise from ``origin``, 1 if after, 0 if equal."""
    ka = _offset_key(origin, a)
    kb = _offset_key(origin, b)
    return (ka > kb) - (ka < kb)


def interval_contains(interval: BoundaryInterval, p: BoundaryPoint) -> bool:
    start, end, closure = interval.start, interval.end, interval.closure
    if start == end:
        return closure is Closure.CLOSED and p == start
    if p == start:
        return closure in (Closure.CLOSED, Closure.OPEN_RIGHT)
    if p == end:
        return closure in (Closure.CLOSED, Closure.OPEN_LEFT)
    return boundary_cmp(start, p, end) < 0


def edges_in_interval(interval: BoundaryInterval, n: int) -> int:
    """Number of edges meeting the interval in a piece of positive length."""
    lo = interval.start.position
    hi = interval.end.position
    if lo == hi:
        return 0
    if hi < lo:
        hi += n
    upper = int(-((-hi) // 1))
    return upper - int(lo // 1)

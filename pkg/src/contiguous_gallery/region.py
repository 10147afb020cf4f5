"""Closed planar regions stored as unions of convex pieces.

Regions built inside a polygon carry, for every piece, the index of the
triangle of the polygon's triangulation that contains it.  Intersecting two
such regions only has to intersect pieces living in the same triangle, and
because every intersection of a feasible region with a convex subset of the
polygon is convex, each piece stays a single convex set.  Pieces without a
triangle key (``None``) intersect with everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from . import convex
from .exact_num import Point, orient_sign


class RegionKind(Enum):
    EMPTY = "empty"
    SINGLE_POINT = "point"
    SEGMENT_CHAIN = "segments"
    AREA = "area"


Piece = tuple  # (key, convex tuple)


@dataclass(frozen=True)
class Region:
    pieces: tuple[Piece, ...] = ()

    @classmethod
    def from_convex(cls, points: Iterable[Point], key=None) -> "Region":
        shape = convex.hull(points)
        return cls(((key, shape),) if shape else ())

    @classmethod
    def from_polygon(cls, points: Sequence[Point]) -> "Region":
        """Region bounded by a simple polygon (any orientation, convex or not)."""
        shape = convex.hull(points)
        if len(shape) == len(set(points)) or len(shape) < 3:
            return cls(((None, shape),))
        from .polygon_model import Polygon
        return cls(tuple((None, convex.hull(t)) for t in Polygon(points).triangles))

    def __bool__(self) -> bool:
        return bool(self.pieces)

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    @property
    def shapes(self) -> list[tuple]:
        return [shape for _, shape in self.pieces]

    @property
    def kind(self) -> RegionKind:
        if not self.pieces:
            return RegionKind.EMPTY
        dim = max(len(s) for s in self.shapes)
        if dim >= 3:
            return RegionKind.AREA
        if dim == 2:
            return RegionKind.SEGMENT_CHAIN
        return RegionKind.SINGLE_POINT if len(set(self.shapes)) == 1 else RegionKind.SEGMENT_CHAIN

    def points(self) -> list[Point]:
        """Distinct extreme points of all pieces, in a deterministic order."""
        seen: dict[Point, None] = {}
        for shape in self.shapes:
            for p in shape:
                seen.setdefault(p, None)
        return list(seen)

    def contains(self, p: Point) -> bool:
        return any(convex.contains(shape, p) for shape in self.shapes)

    def by_key(self) -> dict:
        out: dict = {}
        for key, shape in self.pieces:
            out.setdefault(key, []).append(shape)
        return out

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.shapes)


EMPTY = Region()


def intersect(a: Region, b: Region) -> Region:
    """Exact set intersection of two regions."""
    if not a.pieces or not b.pieces:
        return EMPTY
    b_keyed = b.by_key()
    b_free = b_keyed.get(None, [])
    out: list[Piece] = []
    seen: set = set()
    for key, shape in a.pieces:
        if key is None:
            partners = [(k, s) for k, s in b.pieces]
        else:
            partners = [(key, s) for s in b_keyed.get(key, [])] + [(key, s) for s in b_free]
        for k, other in partners:
            meet = convex.intersect(shape, other)
            if meet and (k, meet) not in seen:
                seen.add((k, meet))
                out.append((k, meet))
    return Region(tuple(out))


def components(region: Region) -> list[list[tuple]]:
    """Connected components of the union of pieces."""
    shapes = list(dict.fromkeys(region.shapes))
    parent = list(range(len(shapes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(shapes)):
        for j in range(i + 1, len(shapes)):
            if find(i) != find(j) and convex.intersect(shapes[i], shapes[j]):
                parent[find(i)] = find(j)
    groups: dict[int, list[tuple]] = {}
    for i, shape in enumerate(shapes):
        groups.setdefault(find(i), []).append(shape)
    return list(groups.values())


def is_connected(region: Region) -> bool:
    return len(components(region)) <= 1


def _split_at(points: Sequence[Point], a: Point, b: Point) -> list[Point]:
    """a, b and every listed point strictly inside segment ab, ordered from a."""
    inner = [p for p in points if p != a and p != b and orient_sign(a, b, p) == 0
             and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
             and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])]
    inner.sort(key=lambda p: (p[0] - a[0]) ** 2 + (p[1] - a[1]) ** 2)
    return [a, *inner, b]


def boundary_edges(region: Region) -> list[tuple[Point, Point]]:
    """Edges of the union's outline, split at every piece vertex."""
    areas = [s for s in dict.fromkeys(region.shapes) if len(s) >= 3]
    verts = list({p for s in region.shapes for p in s})
    counts: dict[frozenset, int] = {}
    for shape in areas:
        m = len(shape)
        for i in range(m):
            pts = _split_at(verts, shape[i], shape[(i + 1) % m])
            for u, v in zip(pts, pts[1:]):
                key = frozenset((u, v))
                counts[key] = counts.get(key, 0) + 1
    return [tuple(k) for k, c in counts.items() if c == 1]


def region_vertex_count(region: Region) -> int:
    """Number of corners on the boundary of the region.

    Boundary edges of two-dimensional parts are edges of a single piece only
    (shared edges are interior).  Points where the boundary continues straight
    are not corners.  Lower-dimensional parts contribute their endpoints.
    """
    kind = region.kind
    if kind in (RegionKind.EMPTY, RegionKind.SINGLE_POINT):
        return 0
    nbrs: dict[Point, set[Point]] = {}
    for u, v in boundary_edges(region):
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
    area_shapes = [s for s in region.shapes if len(s) >= 3]
    # segments and points not swallowed by the two-dimensional part
    verts = list({p for s in region.shapes for p in s})
    for shape in dict.fromkeys(region.shapes):
        if len(shape) == 2:
            pts = _split_at(verts, shape[0], shape[1])
            for u, v in zip(pts, pts[1:]):
                mid = Point((u[0] + v[0]) / 2, (u[1] + v[1]) / 2)
                if not any(convex.contains(s, mid) for s in area_shapes):
                    nbrs.setdefault(u, set()).add(v)
                    nbrs.setdefault(v, set()).add(u)
        elif len(shape) == 1:
            p = shape[0]
            if p not in nbrs and not any(convex.contains(s, p) for s in region.shapes if s != shape):
                nbrs.setdefault(p, set())
    corners = 0
    for p, adj in nbrs.items():
        if len(adj) == 2:
            u, v = adj
            if orient_sign(u, p, v) == 0 and (u[0] - p[0]) * (v[0] - p[0]) + (u[1] - p[1]) * (v[1] - p[1]) < 0:
                continue
        corners += 1
    return corners

"""Exact operations on closed convex sets given by their extreme points.

A convex set is a tuple of points: ``()`` is empty, one point is a point, two
points are a segment, three or more are a polygon in counterclockwise order
without repeated or collinear vertices.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .exact_num import Point, orient_sign, segment_contains

Convex = tuple  # tuple[Point, ...]


def hull(points: Iterable[Point]) -> Convex:
    """Convex hull, counterclockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and orient_sign(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    ring = lower[:-1] + upper[:-1]
    if len(ring) < 3:
        return (pts[0], pts[-1])
    return tuple(ring)


def contains(shape: Convex, p: Point) -> bool:
    m = len(shape)
    if m == 0:
        return False
    if m == 1:
        return shape[0] == p
    if m == 2:
        return segment_contains(shape[0], shape[1], p)
    for i in range(m):
        if orient_sign(shape[i], shape[(i + 1) % m], p) < 0:
            return False
    return True


def _clip(points: Sequence[Point], a: Point, b: Point) -> list[Point]:
    """Keep the part of the convex chain on the closed left side of line ab."""
    m = len(points)
    if m == 0:
        return []
    sides = [orient_sign(a, b, p) for p in points]
    if min(sides) >= 0:
        return list(points)
    if max(sides) < 0:
        return []
    out: list[Point] = []
    abx, aby = b[0] - a[0], b[1] - a[1]
    # a two-point chain is an open segment, longer chains are closed rings
    for i in range(m if m > 2 else 1):
        p = points[i]
        sp = sides[i]
        if sp >= 0:
            out.append(p)
        j = (i + 1) % m
        q = points[j]
        if sp * sides[j] < 0:
            dx, dy = q[0] - p[0], q[1] - p[1]
            t = (abx * (p[1] - a[1]) - aby * (p[0] - a[0])) / (aby * dx - abx * dy)
            out.append(Point(p[0] + t * dx, p[1] + t * dy))
    if m == 2 and sides[1] >= 0:
        out.append(points[1])
    return out


def _segment_overlap(p: Point, q: Point, r: Point, s: Point) -> Convex:
    """Intersection of two collinear segments."""
    key = (lambda u: u[0]) if p[0] != q[0] else (lambda u: u[1])
    lo1, hi1 = sorted((p, q), key=key)
    lo2, hi2 = sorted((r, s), key=key)
    lo = max(lo1, lo2, key=key)
    hi = min(hi1, hi2, key=key)
    if key(lo) > key(hi):
        return ()
    if lo == hi:
        return (lo,)
    return hull((lo, hi))


def _segment_meet(p: Point, q: Point, r: Point, s: Point) -> Convex:
    o1 = orient_sign(p, q, r)
    o2 = orient_sign(p, q, s)
    if o1 == 0 and o2 == 0:
        return _segment_overlap(p, q, r, s)
    if o1 * o2 > 0:
        return ()
    o3 = orient_sign(r, s, p)
    o4 = orient_sign(r, s, q)
    if o3 * o4 > 0:
        return ()
    if o1 == 0:
        return (r,)
    if o2 == 0:
        return (s,)
    if o3 == 0:
        return (p,)
    if o4 == 0:
        return (q,)
    dx, dy = q[0] - p[0], q[1] - p[1]
    ex, ey = s[0] - r[0], s[1] - r[1]
    t = ((r[0] - p[0]) * ey - (r[1] - p[1]) * ex) / (dx * ey - dy * ex)
    return (Point(p[0] + t * dx, p[1] + t * dy),)


def _bbox(shape: Convex):
    xs = [p[0] for p in shape]
    ys = [p[1] for p in shape]
    return min(xs), min(ys), max(xs), max(ys)


def intersect(a: Convex, b: Convex) -> Convex:
    """Exact intersection of two convex sets, including degenerate outcomes."""
    if not a or not b:
        return ()
    ax0, ay0, ax1, ay1 = _bbox(a)
    bx0, by0, bx1, by1 = _bbox(b)
    if ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0:
        return ()
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return b if contains(a, b[0]) else ()
    if len(a) == 2:
        return _segment_meet(a[0], a[1], b[0], b[1])
    # a is a polygon: clip b by each of its edges
    pts: list[Point] = list(b)
    m = len(a)
    for i in range(m):
        pts = _clip(pts, a[i], a[(i + 1) % m])
        if not pts:
            return ()
    return hull(pts)


def clip_halfplane(shape: Convex, a: Point, b: Point) -> Convex:
    """Part of ``shape`` in the closed half-plane left of the directed line ab."""
    return hull(_clip(list(shape), a, b))


def doubled_area(shape: Convex):
    from .polygon_model import doubled_area as _area
    return _area(shape) if len(shape) >= 3 else 0

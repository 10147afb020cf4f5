"""Visibility inside a simple polygon under closed semantics.

A guard ``g`` sees ``x`` when the closed segment ``gx`` lies in the closed
polygon; touching the boundary, even through a reflex corner, is allowed.

The visibility polygon of a viewpoint ``s`` is described in two ways: as a
region of convex pieces, one per triangle of the polygon's triangulation, and
as a boundary cycle alternating between visible parts of polygon edges and
windows.  A window is a segment on a ray from ``s`` that separates the visible
part from a pocket the viewpoint cannot see.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import convex
from .errors import PointOutsidePolygon
from .exact_num import ONE, Point, dist2, orient_sign, segment_contains
from .polygon_model import Polygon, doubled_area, segments_cross
from .region import Region


def _check_inside(poly: Polygon, *points: Point) -> None:
    for p in points:
        if not poly.contains(p):
            raise PointOutsidePolygon(f"{p} is outside the polygon")


def _param(g: Point, x: Point, p: Point):
    dx = x[0] - g[0]
    if dx != 0:
        return (p[0] - g[0]) / dx
    return (p[1] - g[1]) / (x[1] - g[1])


def sees(poly: Polygon, g: Point, x: Point, *, check: bool = True) -> bool:
    """True iff the closed segment gx lies inside the closed polygon."""
    if check:
        _check_inside(poly, g, x)
    if g == x:
        return True
    for a, b in poly.edges:
        if segments_cross(g, x, a, b):
            return False
    cuts = {0, 1}
    for v in poly.vertices:
        if v != g and v != x and segment_contains(g, x, v):
            cuts.add(_param(g, x, v))
    if len(cuts) == 2:
        mid = Point((g[0] + x[0]) / 2, (g[1] + x[1]) / 2)
        return poly.contains(mid)
    ts = sorted(cuts)
    gx, gy = g
    dx, dy = x[0] - gx, x[1] - gy
    for t0, t1 in zip(ts, ts[1:]):
        t = (t0 + t1) / 2
        if not poly.contains(Point(gx + t * dx, gy + t * dy)):
            return False
    return True


def ray_extension(poly: Polygon, s: Point, u: Point) -> Point:
    """Farthest point w on the ray from s through u, beyond u, with [s, w] inside.

    Assumes ``s`` sees ``u``; returns ``u`` when the ray leaves the polygon at u.
    """
    sx, sy = s
    dx, dy = u[0] - sx, u[1] - sy
    events = set()
    for a, b in poly.edges:
        ex, ey = b[0] - a[0], b[1] - a[1]
        den = dx * ey - dy * ex
        if den == 0:
            if orient_sign(s, u, a) == 0:
                for p in (a, b):
                    t = _param(s, u, p)
                    if t > 1:
                        events.add(t)
            continue
        # s + t d = a + w e
        t = ((a[0] - sx) * ey - (a[1] - sy) * ex) / den
        if t <= 1:
            continue
        w = ((a[0] - sx) * dy - (a[1] - sy) * dx) / den
        if 0 <= w <= 1:
            events.add(t)
    prev = ONE
    for t in sorted(events):
        mid = (prev + t) / 2
        if not poly.contains(Point(sx + mid * dx, sy + mid * dy)):
            break
        prev = t
    if prev == 1:
        return u
    return Point(sx + prev * dx, sy + prev * dy)


@dataclass(frozen=True)
class Window:
    """Segment from ``near`` (closer to the viewpoint) to ``far``; the pocket
    lies behind it, bounded by the hidden boundary chain from ``start`` to
    ``end`` in clockwise order."""

    near: Point
    far: Point
    start: Point
    end: Point
    pocket_side: int


@dataclass(frozen=True)
class VisibilityPolygon:
    viewpoint: Point
    region: Region
    boundary: tuple[Point, ...]
    windows: tuple[Window, ...]
    pocket_chains: tuple[tuple[Point, ...], ...] = field(default=())


@dataclass(frozen=True)
class Pocket:
    polygon: tuple[Point, ...]
    window: Window


class _ViewData:
    """Everything a viewpoint sees, computed once."""

    def __init__(self, poly: Polygon, s: Point):
        self.poly = poly
        self.s = s
        verts = poly.vertices
        self.visible = tuple(sees(poly, s, v, check=False) for v in verts)
        exts = []
        for i, v in enumerate(verts):
            if self.visible[i] and v != s:
                w = ray_extension(poly, s, v)
                if w != v:
                    exts.append((v, w))
        self.extensions = tuple(exts)

    def pieces(self) -> Region:
        poly = self.poly
        s = self.s
        out = []
        vis = self.visible
        for key, (i, j, k) in enumerate(poly.triangle_indices):
            tri = poly.triangles[key]
            cand = [poly.vertices[t] for t in (i, j, k) if vis[t]]
            for seg in self.extensions:
                cand.extend(convex.intersect(tri, convex.hull(seg)))
            if convex.contains(tri, s):
                cand.append(s)
            if cand:
                out.append((key, convex.hull(cand)))
        return Region(tuple(out))


def _view(poly: Polygon, s: Point) -> _ViewData:
    cache = poly.__dict__.setdefault("_view_cache", {})
    data = cache.get(s)
    if data is None:
        data = _ViewData(poly, s)
        if len(cache) > 4 * poly.n + 64:
            # keep vertex entries, drop transient ones
            vset = set(poly.vertices)
            for key in [k for k in cache if k not in vset]:
                del cache[key]
        cache[s] = data
    return data


def visibility_region(poly: Polygon, s: Point) -> Region:
    """Visibility polygon of ``s`` as per-triangle convex pieces (cached)."""
    cache = poly.__dict__.setdefault("_vis_region_cache", {})
    region = cache.get(s)
    if region is None:
        region = _view(poly, s).pieces()
        if len(cache) > 4 * poly.n + 64:
            vset = set(poly.vertices)
            for key in [k for k in cache if k not in vset]:
                del cache[key]
        cache[s] = region
    return region


def _visible_interval(poly: Polygon, data: _ViewData, j: int):
    """Visible part of edge j as (lo, hi) points ordered along the edge, or None."""
    a, b = poly.edge(j)
    cand = []
    if data.visible[j]:
        cand.append(a)
    if data.visible[(j + 1) % poly.n]:
        cand.append(b)
    for u, w in data.extensions:
        if segment_contains(a, b, w):
            cand.append(w)
    if segment_contains(a, b, data.s):
        cand.append(data.s)
    if not cand:
        return None
    cand.sort(key=lambda p: dist2(a, p))
    return cand[0], cand[-1]


def visibility_polygon(poly: Polygon, s: Point) -> VisibilityPolygon:
    _check_inside(poly, s)
    data = _view(poly, s)
    n = poly.n
    spans = [(j, *span) for j in range(n) if (span := _visible_interval(poly, data, j)) is not None]
    boundary: list[Point] = []
    for _, lo, hi in spans:
        for p in (lo, hi):
            if not boundary or boundary[-1] != p:
                boundary.append(p)
    if len(boundary) > 1 and boundary[0] == boundary[-1]:
        boundary.pop()
    windows = []
    chains = []
    for idx, (j, _, hi) in enumerate(spans):
        jn, lo_next, _ = spans[(idx + 1) % len(spans)]
        if hi == lo_next:
            continue
        # hidden boundary from hi (on edge j) to lo_next (on edge jn)
        chain = [hi]
        k = (j + 1) % n
        for _ in range(n):
            v = poly.vertices[k]
            if v != chain[-1] and v != lo_next:
                chain.append(v)
            if k == jn:
                break
            k = (k + 1) % n
        chain.append(lo_next)
        near, far = (hi, lo_next) if dist2(s, hi) <= dist2(s, lo_next) else (lo_next, hi)
        side = orient_sign(near, far, chain[1]) if len(chain) > 2 else 0
        windows.append(Window(near, far, hi, lo_next, side))
        chains.append(tuple(chain))
    return VisibilityPolygon(s, visibility_region(poly, s), tuple(boundary), tuple(windows), tuple(chains))


def pockets(vp: VisibilityPolygon) -> list[Pocket]:
    """Hidden components of the polygon, each closed off by its window."""
    return [Pocket(chain, w) for chain, w in zip(vp.pocket_chains, vp.windows)
            if len(chain) > 2 and doubled_area(chain) != 0]


def visible_part_of_segment(poly: Polygon, g: Point, a: Point, b: Point):
    """The (single) sub-segment of boundary segment ab seen from g, or None.

    Candidate endpoints are a, b and the points where rays from g through
    polygon vertices meet ab; the visible set is an interval, so its extreme
    visible candidates delimit it.
    """
    cand = [a, b]
    for v in poly.vertices:
        if v == g:
            continue
        if orient_sign(a, b, v) == 0 and orient_sign(a, b, g) == 0:
            continue
        if orient_sign(g, v, a) * orient_sign(g, v, b) <= 0:
            den_pt = _line_meet(g, v, a, b)
            if den_pt is not None and segment_contains(a, b, den_pt):
                cand.append(den_pt)
    cand = sorted(set(cand), key=lambda p: dist2(a, p))
    seen = [p for p in cand if sees(poly, g, p, check=False)]
    if not seen:
        return None
    return seen[0], seen[-1]


def _line_meet(p, q, r, s):
    dx, dy = q[0] - p[0], q[1] - p[1]
    ex, ey = s[0] - r[0], s[1] - r[1]
    den = dx * ey - dy * ex
    if den == 0:
        return None
    t = ((r[0] - p[0]) * ey - (r[1] - p[1]) * ex) / den
    return Point(p[0] + t * dx, p[1] + t * dy)


def visible_vertices(poly: Polygon, s: Point) -> list[int]:
    return [i for i, flag in enumerate(_view(poly, s).visible) if flag]


def window_segments(poly: Polygon, s: Point) -> Sequence[tuple[Point, Point]]:
    return _view(poly, s).extensions

"""The last boundary point a feasible region can still guard on an edge.

Setting: every point of the feasible region ``F`` sees the start ``a`` of a
boundary segment ``[a, b]`` (a polygon edge, or the tail of one), and no point
of ``F`` sees ``b``.  We want the point ``y`` of ``[a, b]`` closest to ``b``
that some point of ``F`` sees, together with such a guard.

Two independent methods are provided.  The reference method tries every
vertex of ``F`` (an optimal guard can always be found among them) and, for
each, finds how far along the edge it sees by bisecting over the points where
rays through polygon vertices meet the edge.  The tangent method looks only
at the boundary inside the congested triangle cut off by the tangents from
``a`` and ``b`` to ``F``, and inspects the lines tangent to both ``F`` and
that boundary; the sight line of the optimal guard is one of them.  The
traced blocking polygon (``build_blocking_polygon``) draws that boundary as
a single outline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import convex
from .errors import DegenerateTangency, InconsistentInput, InputError
from .exact_num import HALF, Point, cross, dist2, orient_sign, segment_contains
from .polygon_model import BoundaryPoint, Polygon, find_self_intersection
from .region import Region, intersect
from .visibility import sees, visibility_region

__all__ = [
    "LastVisible",
    "TangentFrame",
    "BlockingPolygon",
    "last_visible_point_ref",
    "last_visible_point_tangent",
    "tangent_frame",
    "build_blocking_polygon",
    "common_tangents",
    "blocking_vertex",
    "tangent_stats",
    "blocking_corners",
]


class LastVisible(NamedTuple):
    point: BoundaryPoint
    guard: Point


Line = tuple  # (Point, Point), two distinct points on the line


# shared helpers ---------------------------------------------------------------


def _segment(poly: Polygon, edge: int, start: Point | None) -> tuple[Point, Point]:
    a, b = poly.edge(edge)
    return (a if start is None else start), b


def _meet(p: Point, q: Point, r: Point, s: Point) -> Point | None:
    dx, dy = q[0] - p[0], q[1] - p[1]
    ex, ey = s[0] - r[0], s[1] - r[1]
    den = dx * ey - dy * ex
    if den == 0:
        return None
    t = ((r[0] - p[0]) * ey - (r[1] - p[1]) * ex) / den
    return Point(p[0] + t * dx, p[1] + t * dy)


def _in_closed_triangle(a, b, c, p) -> bool:
    o1 = orient_sign(a, b, p)
    o2 = orient_sign(b, c, p)
    o3 = orient_sign(c, a, p)
    return not ((o1 > 0 or o2 > 0 or o3 > 0) and (o1 < 0 or o2 < 0 or o3 < 0))


def reach(poly: Polygon, g: Point, a: Point, b: Point) -> Point:
    """Farthest point of segment ab seen from g, given that g sees a.

    The seen part of ab is a prefix, and its far end lies on a ray from g
    through a polygon vertex inside the triangle g, a, b.
    """
    cands = {a}
    for c in poly.vertices:
        if c == g or not _in_closed_triangle(g, a, b, c):
            continue
        p = _meet(g, c, a, b)
        if p is not None and segment_contains(a, b, p):
            cands.add(p)
    order = sorted(cands, key=lambda p: dist2(a, p))
    lo, hi = 0, len(order) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if sees(poly, g, order[mid], check=False):
            lo = mid
        else:
            hi = mid - 1
    return order[lo]


def _choose_guard(poly: Polygon, F: Region, y: Point) -> Point:
    """Deterministic optimal guard for y: the vertex of F nearest y that sees it."""
    best = None
    for g in F.points():
        if sees(poly, g, y, check=False):
            key = (dist2(g, y), g)
            if best is None or key < best:
                best = key
    if best is None:
        raise InconsistentInput(f"no vertex of the region sees {y}")
    return best[1]


def blocking_vertex(poly: Polygon, g: Point, y: Point) -> Point | None:
    """Polygon vertex on the open segment gy nearest y, the corner that cuts the view."""
    best = None
    for v in poly.vertices:
        if v != g and v != y and segment_contains(g, y, v):
            if best is None or dist2(v, y) < dist2(best, y):
                best = v
    return best


def _result(poly: Polygon, edge: int, y: Point, guard: Point) -> LastVisible:
    a, b = poly.edge(edge)
    dx = b[0] - a[0]
    s = (y[0] - a[0]) / dx if dx != 0 else (y[1] - a[1]) / (b[1] - a[1])
    return LastVisible(poly.boundary_point(edge, s), guard)


def _check_preconditions(poly: Polygon, F: Region, a: Point, b: Point) -> None:
    if F.is_empty:
        raise InconsistentInput("feasible region is empty")
    if not intersect(F, visibility_region(poly, b)).is_empty:
        raise InconsistentInput("some point of the region sees the far end of the edge")


# reference method ---------------------------------------------------------------


def last_visible_point_ref(poly: Polygon, F: Region, edge: int, start: Point | None = None,
                           *, check: bool = True) -> LastVisible:
    """Vertex enumeration: every vertex of F reaches along the edge, keep the best."""
    a, b = _segment(poly, edge, start)
    if check:
        _check_preconditions(poly, F, a, b)
    best = a
    for g in F.points():
        y = reach(poly, g, a, b)
        if dist2(a, y) > dist2(a, best):
            best = y
    return _result(poly, edge, best, _choose_guard(poly, F, best))


# tangent method -------------------------------------------------------------------


@dataclass(frozen=True)
class TangentFrame:
    """Tangent lines to F through the edge ends, each given by two points.

    ``t_r`` and ``t_m`` pass through ``a``; F lies on the side of ``t_m``
    away from ``b`` and on the side of ``t_r`` facing ``b``.  ``t_l`` passes
    through ``b`` with F on the side facing ``a``.  ``q`` is where ``t_l``
    meets ``t_m``; the triangle ``a, b, q`` is the congested area.
    """

    a: Point
    b: Point
    t_r: Line
    t_m: Line
    t_l: Line
    q: Point


def _tangent_from(p: Point, hull: Sequence[Point], ref: Point, same_side: bool) -> Line:
    """Line through p supporting the hull, with the hull on the ref side (or opposite)."""
    for h in hull:
        if h == p:
            continue
        side = orient_sign(p, h, ref)
        if side == 0:
            continue
        signs = [orient_sign(p, h, x) for x in hull]
        if same_side and all(s * side >= 0 for s in signs):
            return (p, h)
        if not same_side and all(s * side <= 0 for s in signs):
            return (p, h)
    raise DegenerateTangency(f"no tangent from {p} to the region")


def tangent_frame(poly: Polygon, F: Region, edge: int, start: Point | None = None) -> TangentFrame:
    a, b = _segment(poly, edge, start)
    hull = convex.hull(F.points())
    if not hull or convex.contains(hull, a) or convex.contains(hull, b):
        raise DegenerateTangency("edge end inside the hull of the region")
    t_m = _tangent_from(a, hull, b, same_side=False)
    t_r = _tangent_from(a, hull, b, same_side=True)
    t_l = _tangent_from(b, hull, a, same_side=True)
    q = _meet(*t_m, *t_l)
    if q is None:
        raise DegenerateTangency("tangents through the edge ends are parallel")
    if orient_sign(a, b, q) == 0:
        raise DegenerateTangency("congested area is flat")
    return TangentFrame(a, b, t_r, t_m, t_l, q)


@dataclass(frozen=True)
class BlockingPolygon:
    """Closed outline of the blocking polygon; ``edge_tags[i]`` tags edge i
    (from ``boundary[i]`` to ``boundary[i+1]``) as ``boundary``, ``tangent``
    or ``synthetic``."""

    boundary: tuple[Point, ...]
    edge_tags: tuple[str, ...]
    frame: TangentFrame
    contact: Point | None = None


class _Trace:
    """Walk the sides of the congested triangle, detouring along the boundary.

    The first leg runs along t_l from b towards q.  Reaching q, a second leg
    runs along t_m from q towards a, because boundary can also enter the
    triangle through t_m between q and the region.  Inside the triangle the
    boundary is followed until it regains the side being walked.
    """

    def __init__(self, poly: Polygon, F: Region, frame: TangentFrame):
        self.poly = poly
        self.F = F
        self.frame = frame
        self.path: list[Point] = [frame.b]
        self.tags: list[str] = []
        self.contact: Point | None = None
        self.closed = False  # trace ran back into the start of the edge
        self.wrapped = False  # the second leg met boundary
        self.congested = orient_sign(frame.b, frame.q, frame.a)
        self._leg(frame.b, frame.q, frame.a)

    def _leg(self, origin: Point, end: Point, inner: Point) -> None:
        self.origin, self.end = origin, end
        self.d = (end[0] - origin[0], end[1] - origin[1])
        self.inner = orient_sign(origin, end, inner)
        self.second = end == self.frame.a

    def side(self, p: Point) -> int:
        """+1 on the triangle side of the current leg, -1 beyond it, 0 on it."""
        return orient_sign(self.origin, self.end, p) * self.inner

    def param(self, p: Point):
        o = self.origin
        dx, dy = self.d
        return (p[0] - o[0]) / dx if dx != 0 else (p[1] - o[1]) / dy

    def at(self, t) -> Point:
        o = self.origin
        return Point(o[0] + t * self.d[0], o[1] + t * self.d[1])

    def first_contact(self, p: Point, w: Point) -> Point | None:
        seg = convex.hull((p, w))
        best = None
        for shape in self.F.shapes:
            for c in convex.intersect(shape, seg):
                if best is None or dist2(p, c) < dist2(p, best):
                    best = c
        return best

    def push(self, p: Point, tag: str) -> None:
        if p != self.path[-1]:
            self.path.append(p)
            self.tags.append(tag)

    def run(self) -> None:
        poly, frame = self.poly, self.frame
        b = frame.b
        p, t = b, 0
        j = poly.locate(b).edge
        w = poly.vertices[(j + 1) % poly.n]
        # a boundary leaving b behind the edge line stays out of the congested area
        if self.side(w) > 0 and orient_sign(frame.a, b, w) < 0:
            p = self.follow(b, j)
            if p is None:
                return
            t = self.param(p)
        if not self.walk(p, t):
            return
        self.push(frame.q, "tangent")
        self._leg(frame.q, frame.a, b)
        mark = len(self.path)
        self.walk(frame.q, 0)
        self.wrapped = len(self.path) > mark
        if not self.wrapped:
            self.contact = None

    def walk(self, p: Point, t) -> bool:
        """Walk the current leg from p; True when the leg end is reached untouched."""
        poly = self.poly
        for _ in range(4 * poly.n + 4):
            hit = self.hit_after(t)
            target = self.end if hit is None else hit[1]
            c = self.first_contact(p, target)
            if c is not None:
                self.contact = c
                return False
            if hit is None or (self.second and target == self.end):
                if self.second:
                    raise DegenerateTangency("walk along t_m never met the region")
                return True
            t, h = hit
            self.push(h, "tangent")
            j = poly.locate(h).edge
            if self.side(poly.vertices[(j + 1) % poly.n]) > 0:
                p = self.follow(h, j)
                if p is None:
                    return False
                t = self.param(p)
            else:
                p = h
        raise DegenerateTangency("blocking trace did not terminate")

    def hit_after(self, t):
        """First boundary point on the current leg with parameter in (t, 1]."""
        o = self.origin
        dx, dy = self.d
        best = None
        for a1, a2 in self.poly.edges:
            ex, ey = a2[0] - a1[0], a2[1] - a1[1]
            den = dx * ey - dy * ex
            if den == 0:
                if orient_sign(o, self.end, a1) == 0:
                    for v in (a1, a2):
                        tv = self.param(v)
                        if t < tv <= 1 and (best is None or tv < best):
                            best = tv
                continue
            tv = ((a1[0] - o[0]) * ey - (a1[1] - o[1]) * ex) / den
            if not (t < tv <= 1):
                continue
            w = ((a1[0] - o[0]) * dy - (a1[1] - o[1]) * dx) / den
            if 0 <= w <= 1 and (best is None or tv < best):
                best = tv
        if best is None:
            return None
        return best, self.at(best)

    def follow(self, h: Point, j: int) -> Point | None:
        """Follow the boundary from h on edge j; return the point where it regains the leg."""
        poly = self.poly
        n = poly.n
        frame = self.frame
        p = h
        t_prev = self.param(h)
        for _ in range(n + 1):
            w = poly.vertices[(j + 1) % n]
            sw = self.side(w)
            x = _meet(p, w, self.origin, self.end) if sw < 0 else w
            c = self.first_contact(p, x)
            if c is not None:
                if self.second:
                    raise DegenerateTangency("boundary meets the region inside the congested area")
                self.contact = c
                return None
            if w == frame.a:
                self.push(w, "boundary")
                self.closed = True
                return None
            if sw < 0:
                self._check_return(x, t_prev)
                self.push(x, "boundary")
                return x
            if not self.second and orient_sign(frame.a, frame.q, w) * orient_sign(frame.a, frame.q, frame.b) < 0:
                # crossing t_m between F and q walls off every sight line
                # through the rest of t_m, exactly like touching F
                self.contact = _meet(p, w, frame.a, frame.q)
                return None
            if self.second and orient_sign(frame.b, frame.q, w) * self.congested < 0:
                raise DegenerateTangency("boundary leaves the congested area across t_l")
            self.push(w, "boundary")
            j = (j + 1) % n
            p = w
            if sw == 0:
                w2 = poly.vertices[(j + 1) % n]
                if self.side(w2) <= 0:
                    self._check_return(w, t_prev)
                    return w
        raise DegenerateTangency("boundary never returned to the walked side")

    def _check_return(self, x: Point, t_prev) -> None:
        tx = self.param(x)
        if not (t_prev < tx <= 1):
            raise DegenerateTangency("boundary regains the walked side outside the traced range")


def _trace(poly: Polygon, F: Region, frame: TangentFrame) -> _Trace:
    tr = _Trace(poly, F, frame)
    tr.run()
    return tr


def _valid_blocking(points: list[Point], F: Region) -> bool:
    if len(points) < 3 or len(set(points)) != len(points):
        return False
    if find_self_intersection(points) is not None:
        return False
    try:
        region = Region.from_polygon(points)
    except (InputError, RuntimeError):
        return False
    return intersect(region, F).is_empty


def _unit1(v: Point) -> Point:
    """v scaled to unit L1 norm, which keeps it rational."""
    s = abs(v[0]) + abs(v[1])
    return Point(v[0] / s, v[1] / s)


def build_blocking_polygon(poly: Polygon, F: Region, edge: int, start: Point | None = None,
                           *, attempts: int = 40) -> BlockingPolygon:
    """Trace the blocking polygon for the failing edge.

    The backtrack from the contact with F and the offset of ``r`` from ``q``
    start at half the smallest clearance of the traced path from ``t_m`` and
    are halved until the outline is simple and misses F.  When the walk along
    t_m met boundary, the outline instead leaves its last point just above
    t_m and closes around the outside of ``q``.
    """
    frame = tangent_frame(poly, F, edge, start)
    tr = _trace(poly, F, frame)
    a, b, q = frame.a, frame.b, frame.q
    path = list(tr.path)
    tags = list(tr.tags)
    if tr.closed:
        if not _valid_blocking(path, F):
            raise DegenerateTangency("closed trace overlaps the region")
        return BlockingPolygon(tuple(path), tuple(tags) + ("boundary",), frame, None)
    contact = tr.contact
    if contact is not None and contact == path[-1]:
        path.pop()
        tags.pop()
        if not path:
            raise DegenerateTangency("trace starts inside the region")
    tm = frame.t_m
    clear = [abs(cross(tm[0], tm[1], p)) for p in path]
    clear = [c for c in clear if c > 0]
    if not clear:
        raise DegenerateTangency("traced path lies on t_m")
    c0 = min(clear)
    anchor = path[-1]
    dx, dy = q[0] - b[0], q[1] - b[1]
    perp = Point(dy, -dx) if orient_sign(b, q, Point(b[0] + dy, b[1] - dx)) != tr.congested else Point(-dy, dx)
    below = orient_sign(tm[0], tm[1], b)
    if orient_sign(tm[0], tm[1], q + perp) != below:
        perp = Point(b[0] - a[0], b[1] - a[1])
    slope = abs(cross(tm[0], tm[1], tm[0] + perp) - cross(tm[0], tm[1], tm[0]))
    delta = c0 / (2 * slope)
    if tr.wrapped:
        return _close_outside(path, tags, frame, F, delta, attempts)
    if contact is not None:
        lam = min(HALF, c0 / (2 * abs(cross(tm[0], tm[1], anchor)))) if cross(tm[0], tm[1], anchor) != 0 else HALF
    else:
        lam = None
    for _ in range(attempts):
        pts = list(path)
        ptags = list(tags)
        if contact is not None:
            z = Point(contact[0] + lam * (anchor[0] - contact[0]), contact[1] + lam * (anchor[1] - contact[1]))
            pts.append(z)
            ptags.append("synthetic")
        r = q + perp * delta
        if orient_sign(tm[0], tm[1], r) == below:
            r2 = _meet(r, Point(r[0] + dx, r[1] + dy), a, b)
            tail = [r] if r2 is None or r2 == b else [r, r2]
            pts.extend(tail)
            ptags.extend(["synthetic"] * len(tail))
            ptags.append("synthetic")  # closing edge back to b
            if _valid_blocking(pts, F):
                return BlockingPolygon(tuple(pts), tuple(ptags), frame, contact)
        delta = delta / 2
        if lam is not None:
            lam = lam / 2
    raise DegenerateTangency("no backtrack distance gives a simple blocking polygon")


def _close_outside(path, tags, frame: TangentFrame, F: Region, eps, attempts: int) -> BlockingPolygon:
    # from the last point p on t_m, step towards q and just above t_m, go
    # round q through the opposite wedge, then back to b parallel to t_l
    a, b, q = frame.a, frame.b, frame.q
    p = path[-1]
    along, up = _unit1(q - a), _unit1(q - b)
    for _ in range(attempts):
        z = p + along * eps + up * (eps * eps)
        r = q + (along + up) * eps
        r2 = _meet(r, r + (q - b), a, b)
        if r2 is not None:
            pts = path + [z, r, r2]
            ptags = tags + ["synthetic"] * 4
            if _valid_blocking(pts, F):
                return BlockingPolygon(tuple(pts), tuple(ptags), frame, None)
        eps = eps / 2
    raise DegenerateTangency("no offset closes the blocking polygon around q")


def _one_side(points: Sequence[Point], p: Point, q: Point) -> int:
    """Common side of all points w.r.t. line pq (+1/-1), 0 if all on it, None if split."""
    pos = neg = False
    for x in points:
        s = orient_sign(p, q, x)
        pos |= s > 0
        neg |= s < 0
        if pos and neg:
            return None
    return 1 if pos else (-1 if neg else 0)


def common_tangents(a: Sequence[Point] | Region, b: Sequence[Point] | BlockingPolygon) -> list[Line]:
    """Every line supporting both shapes, each shape in one closed half-plane.

    Candidates are lines through a hull vertex of each shape; collinear
    duplicates are reported once.
    """
    pa = a.points() if isinstance(a, Region) else list(a)
    pb = list(b.boundary) if isinstance(b, BlockingPolygon) else list(b)
    ha = convex.hull(pa)
    hb = convex.hull(pb)
    lines: list[Line] = []
    for u in ha:
        for w in hb:
            if u == w:
                continue
            if _one_side(ha, u, w) is None or _one_side(hb, u, w) is None:
                continue
            if any(orient_sign(p, q, u) == 0 and orient_sign(p, q, w) == 0 for p, q in lines):
                continue
            lines.append((u, w))
    return lines


_STATS = {"calls": 0, "wide": 0}


def tangent_stats() -> dict:
    """Counts of tangent-method calls and of calls whose congested area was degenerate."""
    return dict(_STATS)


def blocking_corners(poly: Polygon, frame: TangentFrame | None) -> list[int]:
    """Indices of polygon vertices in the closed congested triangle (all of them without a frame)."""
    if frame is None:
        return list(range(poly.n))
    a, b, q = frame.a, frame.b, frame.q
    return [i for i, v in enumerate(poly.vertices) if _in_closed_triangle(a, b, q, v)]


def _supports(points: Sequence[Point], u: Point, w: Point) -> bool:
    return _one_side(points, u, w) is not None


def _corner_tangents(poly: Polygon, fpts: Sequence[Point], corners: Sequence[int]):
    """Lines through a vertex of F and a blocking corner that support both F and the boundary at the corner."""
    n = poly.n
    for i in corners:
        c = poly.vertices[i]
        local = (poly.vertices[i - 1], c, poly.vertices[(i + 1) % n])
        for u in fpts:
            if u != c and _supports(fpts, u, c) and _supports(local, u, c):
                yield u, c


def last_visible_point_tangent(poly: Polygon, F: Region, edge: int, start: Point | None = None,
                               *, check: bool = True, outline: bool = False) -> LastVisible:
    """Common tangents of F and the blocking boundary locate the optimal sight line.

    The sight line of an optimal guard touches F and grazes a polygon vertex
    inside the congested triangle, with the boundary there on one side.  Each
    such line is cut with the edge and the farthest cut that a point of F on
    the line actually sees wins.  With ``outline=True`` the traced blocking
    polygon and its hull tangents are used instead; that construction can
    raise ``DegenerateTangency``.
    """
    a, b = _segment(poly, edge, start)
    if check:
        _check_preconditions(poly, F, a, b)
    fpts = F.points()
    if all(orient_sign(a, b, g) >= 0 for g in fpts):
        # F sits behind the line of the edge and sees only its start
        return _result(poly, edge, a, _choose_guard(poly, F, a))
    _STATS["calls"] += 1
    if outline:
        lines = common_tangents(fpts, build_blocking_polygon(poly, F, edge, start))
    else:
        try:
            frame = tangent_frame(poly, F, edge, start)
        except DegenerateTangency:
            _STATS["wide"] += 1
            frame = None
        lines = _corner_tangents(poly, fpts, blocking_corners(poly, frame))
    best = a
    for u, w in lines:
        y = _meet(u, w, a, b)
        if y is None or not segment_contains(a, b, y) or dist2(a, y) <= dist2(a, best):
            continue
        on_line = [g for g in fpts if orient_sign(u, w, g) == 0]
        if any(sees(poly, g, y, check=False) for g in on_line):
            best = y
    return _result(poly, edge, best, _choose_guard(poly, F, best))

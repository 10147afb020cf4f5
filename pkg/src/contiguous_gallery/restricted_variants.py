"""Vertex-restricted versions of the problem, solved as minimum circle covers.

Both variants produce a finite family of boundary arcs, each seen by a known
guard, and then pick as few of them as possible to cover the boundary.  In
the interval-restricted variant every chain must start and end at a polygon
vertex; in the guard-restricted variant every guard must stand on a vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import Uncoverable
from .exact_num import ZERO, Point, format_rational
from .feasible_region import kernel_nonempty
from .greedy_solver import GreedyStep, greedy_interval
from .polygon_model import BoundaryInterval, BoundaryPoint, Polygon
from .visibility import visible_part_of_segment

__all__ = [
    "Arc",
    "RestrictedMode",
    "RestrictedSolution",
    "circle_cover_min",
    "solve_interval_restricted",
    "solve_guard_restricted",
    "guard_arcs",
    "vertex_intervals",
]


@dataclass(frozen=True)
class Arc:
    """A clockwise boundary arc and a guard seeing all of it.

    An arc whose start equals its end is the whole boundary.
    """

    interval: BoundaryInterval
    guard: Point

    @property
    def start(self) -> BoundaryPoint:
        return self.interval.start

    @property
    def end(self) -> BoundaryPoint:
        return self.interval.end

    @property
    def full(self) -> bool:
        return self.interval.start == self.interval.end

    def length(self, n: int):
        d = (self.end.position - self.start.position) % n
        return n if d == 0 else d


def arc(start: BoundaryPoint, end: BoundaryPoint, guard: Point) -> Arc:
    return Arc(BoundaryInterval(start, end), guard)


class RestrictedMode(Enum):
    INTERVAL_VERTEX = "IntervalVertexRestricted"
    GUARD_VERTEX = "GuardVertexRestricted"


@dataclass(frozen=True)
class RestrictedSolution:
    chains: tuple[Arc, ...]
    mode: RestrictedMode

    @property
    def size(self) -> int:
        return len(self.chains)

    def to_document(self) -> dict:
        return {
            "size": self.size,
            "mode": self.mode.value,
            "chains": [
                {
                    "start": [c.start.edge, format_rational(c.start.s)],
                    "end": [c.end.edge, format_rational(c.end.s)],
                    "guard": [format_rational(c.guard[0]), format_rational(c.guard[1])],
                }
                for c in self.chains
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2)

    def as_steps(self) -> tuple[GreedyStep, ...]:
        return tuple(GreedyStep(c.start, c.end, c.guard) for c in self.chains)


# circle cover ----------------------------------------------------------------------


def _covers_everything(arcs: Sequence[Arc], n: int) -> bool:
    if any(a.full for a in arcs):
        return True
    pieces = []
    for a in arcs:
        lo = a.start.position
        hi = lo + a.length(n)
        if hi > n:
            pieces.append((lo, n))
            pieces.append((ZERO, hi - n))
        else:
            pieces.append((lo, hi))
    pieces.sort()
    reach = ZERO
    for lo, hi in pieces:
        if lo > reach:
            return False
        reach = max(reach, hi)
    return reach >= n


def _undominated(arcs: Sequence[Arc], n: int) -> list[Arc]:
    """Drop duplicates and every arc contained in another one."""
    spans = {}
    for a in arcs:
        key = (a.start.position, a.length(n))
        spans.setdefault(key, a)
    items = list(spans.items())
    keep = []
    for (s, L), a in items:
        dominated = False
        for (s2, L2), b in items:
            if (s2, L2) == (s, L):
                continue
            off = (s - s2) % n
            if off + L <= L2:
                dominated = True
                break
        if not dominated:
            keep.append(a)
    keep.sort(key=lambda a: a.start.position)
    return keep


def _greedy_from(first: int, arcs: list[Arc], n: int) -> list[int] | None:
    """Fewest arcs covering the circle given that arcs[first] is used."""
    s0 = arcs[first].start.position
    spans = []
    for i, a in enumerate(arcs):
        off = (a.start.position - s0) % n
        L = a.length(n)
        spans.append((off, off + L, i))
        spans.append((off - n, off - n + L, i))
    chosen = [first]
    reach = arcs[first].length(n)
    while reach < n:
        best = None
        for lo, hi, i in spans:
            if lo <= reach and hi > reach and (best is None or hi > best[0]):
                best = (hi, i)
        if best is None:
            return None
        reach = best[0]
        chosen.append(best[1])
    return chosen


def circle_cover_min(arcs: Sequence[Arc], n: int) -> list[Arc]:
    """Minimum number of arcs whose union is the whole boundary of length n.

    Dominated arcs are pruned first; then, for every remaining arc, the cover
    that uses it is completed greedily (always extending the covered stretch
    as far as possible), and the smallest of these covers is returned in
    clockwise order.
    """
    if not arcs:
        raise Uncoverable("no arcs")
    for a in arcs:
        if a.full:
            return [a]
    if not _covers_everything(arcs, n):
        raise Uncoverable("the arcs leave part of the boundary uncovered")
    cand = _undominated(arcs, n)
    best = None
    for i in range(len(cand)):
        cover = _greedy_from(i, cand, n)
        if cover is not None and (best is None or len(cover) < len(best)):
            best = cover
    if best is None:
        raise Uncoverable("the arcs leave part of the boundary uncovered")
    return [cand[i] for i in best]


def _partition(cover: Sequence[Arc], n: int) -> tuple[Arc, ...]:
    """Cut a cyclically ordered cover into chains meeting end to start."""
    if len(cover) == 1:
        a = cover[0]
        return (arc(a.start, a.start, a.guard),)
    out = []
    k = len(cover)
    for i, a in enumerate(cover):
        out.append(arc(a.start, cover[(i + 1) % k].start, a.guard))
    return tuple(out)


# interval-restricted -----------------------------------------------------------------


def vertex_intervals(poly: Polygon) -> list[Arc]:
    """For each vertex, the longest visible chain from it that ends at a vertex."""
    n = poly.n
    out = []
    for i in range(n):
        x = BoundaryPoint(i, ZERO)
        step = greedy_interval(poly, x)
        if step.end == x:
            out.append(arc(x, x, step.guard))
            continue
        end = BoundaryPoint(step.end.edge, ZERO)
        if end == x:
            # the chain never gets past the first edge; a single edge is always visible
            end = BoundaryPoint((i + 1) % n, ZERO)
            out.append(arc(x, end, _edge_guard(poly, i)))
            continue
        out.append(arc(x, end, step.guard))
    return out


def _edge_guard(poly: Polygon, i: int) -> Point:
    a, b = poly.edge(i)
    return Point((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)


def solve_interval_restricted(poly: Polygon) -> RestrictedSolution:
    """Fewest chains with vertex endpoints; each chain may use any guard point."""
    w = kernel_nonempty(poly)
    if w is not None:
        x = BoundaryPoint(0, ZERO)
        return RestrictedSolution((arc(x, x, w),), RestrictedMode.INTERVAL_VERTEX)
    cover = circle_cover_min(vertex_intervals(poly), poly.n)
    return RestrictedSolution(_partition(cover, poly.n), RestrictedMode.INTERVAL_VERTEX)


# guard-restricted -----------------------------------------------------------------------


def _on_edge(poly: Polygon, e: int, p: Point) -> BoundaryPoint:
    a, b = poly.edge(e)
    dx = b[0] - a[0]
    s = (p[0] - a[0]) / dx if dx != 0 else (p[1] - a[1]) / (b[1] - a[1])
    if s == 1:
        return BoundaryPoint((e + 1) % poly.n, ZERO)
    return BoundaryPoint(e, s)


def guard_arcs(poly: Polygon, g: Point) -> list[Arc]:
    """Maximal boundary arcs seen from g; pieces touching at a vertex are merged."""
    n = poly.n
    parts = []
    for e in range(n):
        a, b = poly.edge(e)
        seen = visible_part_of_segment(poly, g, a, b)
        parts.append(None if seen is None else (_on_edge(poly, e, seen[0]), _on_edge(poly, e, seen[1])))
    if all(p is not None and p[0] == BoundaryPoint(e, ZERO) and p[1] == BoundaryPoint((e + 1) % n, ZERO)
           for e, p in enumerate(parts)):
        x = BoundaryPoint(0, ZERO)
        return [arc(x, x, g)]
    # start the sweep just after a gap so merged runs never straddle the origin
    first = next(e for e in range(n)
                 if parts[e] is None or parts[e - 1] is None or parts[e - 1][1] != parts[e][0])
    runs: list[list] = []
    for k in range(n):
        e = (first + k) % n
        p = parts[e]
        if p is None:
            continue
        if runs and runs[-1][1] == p[0]:
            runs[-1][1] = p[1]
        else:
            runs.append([p[0], p[1]])
    return [arc(s, t, g) for s, t in runs if s != t]


def solve_guard_restricted(poly: Polygon) -> RestrictedSolution:
    """Fewest chains when every guard stands on a polygon vertex."""
    arcs = []
    for v in poly.vertices:
        arcs.extend(guard_arcs(poly, v))
    cover = circle_cover_min(arcs, poly.n)
    return RestrictedSolution(_partition(cover, poly.n), RestrictedMode.GUARD_VERTEX)

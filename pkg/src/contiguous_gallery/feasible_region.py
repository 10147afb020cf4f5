"""Feasible regions: where a guard can stand to see a set of boundary targets.

The feasible region of a target set is the intersection of the visibility
polygons of its targets.  For a boundary interval it suffices to use the two
endpoints and the vertices strictly between them, because a point that sees
both ends of a boundary segment sees the whole segment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import TargetNotOnBoundary
from .exact_num import ZERO, Point
from .polygon_model import BoundaryInterval, BoundaryPoint, Polygon, boundary_cmp
from .region import EMPTY, Region, RegionKind, components, intersect, is_connected, region_vertex_count
from .visibility import visibility_region

__all__ = [
    "IntervalSpec",
    "Region",
    "RegionKind",
    "intersect",
    "feasible_region",
    "interval_targets",
    "kernel_nonempty",
    "region_vertex_count",
    "components",
    "is_connected",
    "EMPTY",
]


@dataclass(frozen=True)
class IntervalSpec:
    """Targets a guard must see: a boundary interval or an explicit point set."""

    interval: BoundaryInterval | None = None
    points: tuple = ()

    def __post_init__(self):
        if self.interval is None and not self.points:
            raise ValueError("an interval spec needs an interval or at least one point")


def interval_targets(poly: Polygon, interval: BoundaryInterval) -> list[Point]:
    """Endpoints of the interval plus every vertex strictly inside it."""
    start, end = interval.start, interval.end
    targets = [poly.point_at(start)]
    if start != end:
        j = (start.edge + 1) % poly.n
        for _ in range(poly.n):
            bp = BoundaryPoint(j, ZERO)
            if boundary_cmp(start, bp, end) >= 0 or bp == start:
                break
            targets.append(poly.vertices[j])
            j = (j + 1) % poly.n
        targets.append(poly.point_at(end))
    return list(dict.fromkeys(targets))


def _resolve(poly: Polygon, target) -> Point:
    if isinstance(target, BoundaryPoint):
        return poly.point_at(target)
    p = Point(*target)
    if not poly.on_boundary(p):
        raise TargetNotOnBoundary(f"{p} is not on the polygon boundary")
    return p


def feasible_region(poly: Polygon, spec: Union[IntervalSpec, BoundaryInterval, Sequence]) -> Region:
    if isinstance(spec, BoundaryInterval):
        spec = IntervalSpec(interval=spec)
    elif not isinstance(spec, IntervalSpec):
        spec = IntervalSpec(points=tuple(spec))
    if spec.interval is not None:
        targets = interval_targets(poly, spec.interval)
    else:
        targets = [_resolve(poly, t) for t in spec.points]
    return intersect_visibility(poly, targets)


def intersect_visibility(poly: Polygon, targets: Iterable[Point], start: Region | None = None) -> Region:
    region = start
    for t in targets:
        vis = visibility_region(poly, t)
        region = vis if region is None else intersect(region, vis)
        if region.is_empty:
            return EMPTY
    return region if region is not None else EMPTY


def kernel_nonempty(poly: Polygon) -> Point | None:
    """A point seeing the whole boundary, or ``None`` if the polygon is not star-shaped."""
    cache = poly.__dict__
    if "_kernel" not in cache:
        region = intersect_visibility(poly, poly.vertices)
        cache["_kernel"] = _witness(region)
    return cache["_kernel"]


def _witness(region: Region) -> Point | None:
    if region.is_empty:
        return None
    shapes = sorted(region.shapes, key=len, reverse=True)
    shape = shapes[0]
    k = len(shape)
    return Point(sum(p[0] for p in shape) / k, sum(p[1] for p in shape) / k)

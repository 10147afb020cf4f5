"""The last point of an edge that a feasible region can still guard.

The region below is the set of guards that see the chain so far; the
failing edge runs from (4, 1) to (1, 1).  Both methods agree: the reference
method pushes every corner of the region as far along the edge as it sees,
the tangent method looks only at lines touching the region and grazing a
corner inside the congested triangle.
"""

from contiguous_gallery import fixtures
from contiguous_gallery.last_visible import (blocking_corners, blocking_vertex, build_blocking_polygon,
                                             last_visible_point_ref, last_visible_point_tangent,
                                             tangent_frame)
from contiguous_gallery.region import Region


def fmt(p) -> str:
    return f"({float(p[0]):.3f}, {float(p[1]):.3f})"


def main() -> None:
    poly, region, edge = fixtures.blocking_demo()
    F = Region.from_polygon(region)
    a, b = poly.edge(edge)
    print(f"edge {fmt(a)} -> {fmt(b)}")
    frame = tangent_frame(poly, F, edge)
    print(f"congested triangle: a={fmt(frame.a)} b={fmt(frame.b)} q={fmt(frame.q)}")
    print("corners inside it:", ", ".join(fmt(poly.vertices[i]) for i in blocking_corners(poly, frame)))

    ref = last_visible_point_ref(poly, F, edge)
    tan = last_visible_point_tangent(poly, F, edge)
    y = poly.point_at(ref.point)
    print(f"reference: y = {fmt(y)}  s = {ref.point.s}  guard {fmt(ref.guard)}")
    print(f"tangent:   y = {fmt(poly.point_at(tan.point))}  s = {tan.point.s}  guard {fmt(tan.guard)}")
    print(f"the sight line grazes {fmt(blocking_vertex(poly, ref.guard, y))}")

    outline = build_blocking_polygon(poly, F, edge)
    print("traced blocking outline:")
    for p, tag in zip(outline.boundary, outline.edge_tags):
        print(f"  {fmt(p)}  then {tag}")


if __name__ == "__main__":
    main()

"""Standalone SVG pictures of a polygon and its guarded chains."""

from __future__ import annotations

from typing import Sequence

from .polygon_model import BoundaryPoint, Polygon

PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf")


def _chain_points(poly: Polygon, start: BoundaryPoint, end: BoundaryPoint, whole: bool) -> list:
    n = poly.n
    length = (end.position - start.position) % n
    if length == 0 and whole:
        length = n
    pts = [poly.point_at(start)]
    j = start.edge + 1
    while j - start.position < length:
        pts.append(poly.vertices[j % n])
        j += 1
    pts.append(poly.point_at(end))
    return pts


def render_svg(poly: Polygon, chains: Sequence | None = None, *, size: int = 600, margin: int = 20) -> str:
    """SVG text: outline, one colour per chain, guard dots, dashed sight lines to chain ends."""
    xs = [float(v[0]) for v in poly.vertices]
    ys = [float(v[1]) for v in poly.vertices]
    if chains:
        xs += [float(c.guard[0]) for c in chains]
        ys += [float(c.guard[1]) for c in chains]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = (size - 2 * margin) / span

    def tx(p) -> str:
        x = margin + (float(p[0]) - x0) * scale
        y = margin + (y1 - float(p[1])) * scale
        return f"{x:.3f},{y:.3f}"

    width = margin * 2 + (x1 - x0) * scale
    height = margin * 2 + (y1 - y0) * scale
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<polygon points="{" ".join(tx(v) for v in poly.vertices)}" fill="#f2f2f2" stroke="black" stroke-width="1"/>',
    ]
    chains = list(chains or ())
    whole = len(chains) == 1
    for i, c in enumerate(chains):
        colour = PALETTE[i % len(PALETTE)]
        pts = _chain_points(poly, c.start, c.end, whole)
        out.append(f'<polyline points="{" ".join(tx(p) for p in pts)}" fill="none" '
                   f'stroke="{colour}" stroke-width="4" stroke-linecap="round"/>')
        g = tx(c.guard)
        for end in (pts[0], pts[-1]):
            out.append(f'<line x1="{g.split(",")[0]}" y1="{g.split(",")[1]}" '
                       f'x2="{tx(end).split(",")[0]}" y2="{tx(end).split(",")[1]}" '
                       f'stroke="{colour}" stroke-width="1" stroke-dasharray="4 3"/>')
        gx, gy = g.split(",")
        out.append(f'<circle cx="{gx}" cy="{gy}" r="5" fill="{colour}" stroke="black" stroke-width="0.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

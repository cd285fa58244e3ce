"""SVG rendering of two-dimensional drawings.

Vertices are filled circles; lattice points strictly inside an edge segment
are empty circles. Only rendering uses floats; geometry stays exact.
"""
from __future__ import annotations

from .lattice import segment_gcd, segment_lattice_points
from .verify import GridDrawing

MAX_MARKS_PER_EDGE = 64


def render_svg(dr: GridDrawing, size: int = 640, margin: int = 24) -> str:
    if dr.dim != 2:
        raise ValueError("SVG output is only available for two-dimensional drawings")
    if not dr.points:
        return f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}"></svg>\n'
    (lx, ly), (hx, hy) = dr.bounding_box()
    sx = (size - 2 * margin) / max(hx - lx, 1)
    sy = (size - 2 * margin) / max(hy - ly, 1)

    def pos(p):
        # y grows upward in the drawing, downward in SVG
        return margin + (p[0] - lx) * sx, size - margin - (p[1] - ly) * sy

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">']
    out.append('<g stroke="black" stroke-width="1.5">')
    for u, v in dr.graph.sorted_edges():
        (x1, y1), (x2, y2) = pos(dr.points[u]), pos(dr.points[v])
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
    out.append("</g>")
    out.append('<g fill="white" stroke="black">')
    for u, v in dr.graph.sorted_edges():
        if segment_gcd(dr.points[u], dr.points[v]) > MAX_MARKS_PER_EDGE:
            continue
        for p in segment_lattice_points(dr.points[u], dr.points[v])[1:-1]:
            x, y = pos(p)
            out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3"/>')
    out.append("</g>")
    out.append('<g fill="black">')
    for v, p in enumerate(dr.points):
        x, y = pos(p)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="5"><title>{v}</title></circle>')
    out.append("</g></svg>")
    return "\n".join(out) + "\n"

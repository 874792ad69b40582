"""Flat SVG of the six-lens decomposition of the 24-cell's vertex sphere.

Only the combinatorics and labels are drawn: each lens is a vesica whose rim
stands for the shared boundary circle, front labels above the axis, back labels (gray) below.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

from .complexes import LensTable, lens_assignment
from .lattices import phi_label

LENS_W, LENS_H, GAP = 180, 120, 20


def _label(x) -> str:
    # "jzeta^2" reads better as "jζ²" in a drawing
    sup = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
    s = phi_label(x).replace("zeta^", "ζ^")
    if "^" in s:
        head, exp = s.split("^")
        s = head + exp.translate(sup)
    return s.replace("zeta", "ζ")


def lens_svg(table: LensTable | None = None) -> str:
    table = table or lens_assignment()
    n = len(table.lenses)
    width = n * (LENS_W + GAP) + GAP
    height = LENS_H + 100
    cy = 50 + LENS_H // 2
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'font-family="serif" font-size="13">']
    ring = ", ".join(_label(x) for x in table.boundary)
    out.append(f'<text x="{GAP}" y="24">shared boundary circle: {escape(ring)}</text>')
    for lens in table.lenses:
        x0 = GAP + lens.index * (LENS_W + GAP)
        x1 = x0 + LENS_W
        h = LENS_H // 2
        out.append(f'<path d="M {x0} {cy} Q {(x0 + x1) // 2} {cy - 2 * h} {x1} {cy} '
                   f'Q {(x0 + x1) // 2} {cy + 2 * h} {x0} {cy} Z" fill="none" stroke="black"/>')
        out.append(f'<line x1="{x0}" y1="{cy}" x2="{x1}" y2="{cy}" stroke="#bbb" stroke-dasharray="3 3"/>')
        mid = (x0 + x1) // 2
        out.append(f'<circle cx="{mid}" cy="{cy}" r="3"/>')
        out.append(f'<text x="{mid}" y="{cy + 16}" text-anchor="middle" font-size="10">'
                   f'lens {lens.index}</text>')
        for t, x in enumerate(lens.front):
            px = x0 + (t + 1) * LENS_W // (len(lens.front) + 1)
            out.append(f'<text x="{px}" y="{cy - h // 2}" text-anchor="middle">{escape(_label(x))}</text>')
        for t, x in enumerate(lens.back):
            px = x0 + (t + 1) * LENS_W // (len(lens.back) + 1)
            out.append(f'<text x="{px}" y="{cy + h // 2 + 12}" text-anchor="middle" '
                       f'fill="gray">{escape(_label(x))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

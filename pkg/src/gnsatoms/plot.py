"""SVG gap diagram for d = 2: gaps in red, elements of S in black, special
gaps circled.  Plain SVG text, no plotting dependency."""

from __future__ import annotations

from .core import GapSet
from .invariants import profile

CELL = 40
MARGIN = 40


def gap_diagram_svg(H: GapSet) -> str:
    if H.d != 2:
        raise ValueError("gap diagrams are only drawn for d = 2")
    prof = profile(H)
    cx, cy = prof.corner if H.gaps else (1, 1)
    w, h = cx - 1, cy - 1
    width = 2 * MARGIN + max(w, 1) * CELL
    height = 2 * MARGIN + max(h, 1) * CELL

    def at(x, y):
        return MARGIN + x * CELL, height - MARGIN - y * CELL

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for x in range(w + 1):
        x0, y0 = at(x, 0)
        _, y1 = at(x, h)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="#ccc"/>')
        out.append(f'<text x="{x0}" y="{y0 + 20}" font-size="12" text-anchor="middle">{x}</text>')
    for y in range(h + 1):
        x0, y0 = at(0, y)
        x1, _ = at(w, y)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="#ccc"/>')
        out.append(f'<text x="{x0 - 16}" y="{y0 + 4}" font-size="12" text-anchor="middle">{y}</text>')
    special = set(prof.eh)
    for x in range(w + 1):
        for y in range(h + 1):
            px, py = at(x, y)
            colour = "red" if (x, y) in H.gaps else "black"
            out.append(f'<circle cx="{px}" cy="{py}" r="4" fill="{colour}"/>')
            if (x, y) in special:
                out.append(f'<circle cx="{px}" cy="{py}" r="9" fill="none" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

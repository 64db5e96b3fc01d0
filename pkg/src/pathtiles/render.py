"""Static SVG figures of regions and sampled tilings.

Triangle cells are drawn to scale on the triangular lattice (vertical
lattice lines, heights doubled internally); free boundary edges are dashed
and weight-1/2 lozenges carry a shaded ellipse on their shared edge.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

from .lozenge import Cell, Region

COL = 26.0  # pixel distance between vertical lattice lines
ROW = 15.0  # pixel height of one half-unit (one y step)
PAD = 20.0


def _cell_vertices(cell: Cell) -> list[tuple[int, int]]:
    x, y, o = cell
    if o == "L":
        return [(x, y), (x + 1, y + 1), (x + 1, y - 1)]
    return [(x, y - 1), (x, y + 1), (x + 1, y)]


def _shared_vertices(a: Cell, b: Cell) -> list[tuple[int, int]]:
    shared = set(_cell_vertices(a)) & set(_cell_vertices(b))
    return sorted(shared)


def _vertical_side_vertices(cell: Cell) -> list[tuple[int, int]]:
    x, y, o = cell
    line = x + 1 if o == "L" else x
    return [(line, y - 1), (line, y + 1)]


def region_svg(region: Region, tiling=None) -> ET.Element:
    """An SVG element showing the region, optionally with one tiling."""
    cells = region.sorted_cells()
    if cells:
        xs = [v[0] for c in cells for v in _cell_vertices(c)]
        ys = [v[1] for c in cells for v in _cell_vertices(c)]
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
    else:
        x0 = x1 = y0 = y1 = 0

    def px(v: tuple[int, int]) -> tuple[float, float]:
        return (PAD + (v[0] - x0) * COL, PAD + (y1 - v[1]) * ROW)

    width = PAD * 2 + (x1 - x0) * COL
    height = PAD * 2 + (y1 - y0) * ROW
    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=f"{width:.0f}px",
        height=f"{height:.0f}px",
        viewBox=f"0 0 {width:.0f} {height:.0f}",
    )

    def polygon(parent, verts, **style):
        points = " ".join(f"{x:.2f},{y:.2f}" for x, y in (px(v) for v in verts))
        return ET.SubElement(parent, "polygon", points=points, **style)

    cell_layer = ET.SubElement(svg, "g")
    for cell in cells:
        polygon(
            cell_layer,
            _cell_vertices(cell),
            fill="#f4f1e8",
            stroke="#999999",
            **{"stroke-width": "0.6"},
        )

    if tiling is not None:
        tile_layer = ET.SubElement(svg, "g")
        for cover in sorted(tiling, key=lambda cv: sorted(cv)):
            members = sorted(cover)
            if len(members) == 2:
                a, b = members
                outline = _lozenge_outline(a, b)
                polygon(
                    tile_layer,
                    outline,
                    fill="#cfe2f3",
                    stroke="#1f4e79",
                    **{"stroke-width": "1.4"},
                )
            else:
                polygon(
                    tile_layer,
                    _cell_vertices(members[0]),
                    fill="#d8ead3",
                    stroke="#38761d",
                    **{"stroke-width": "1.4"},
                )

    half_layer = ET.SubElement(svg, "g")
    for key, weight in sorted(region.weights.items(), key=lambda kv: sorted(kv[0])):
        members = sorted(key)
        if len(members) == 2:
            shared = _shared_vertices(*members)
        else:
            shared = _vertical_side_vertices(members[0])
        (ax, ay), (bx, by) = (px(shared[0]), px(shared[-1]))
        ET.SubElement(
            half_layer,
            "ellipse",
            cx=f"{(ax + bx) / 2:.2f}",
            cy=f"{(ay + by) / 2:.2f}",
            rx=f"{COL * 0.3:.2f}",
            ry=f"{ROW * 0.5:.2f}",
            fill="#b7b7b7",
            opacity="0.85",
        )

    free_layer = ET.SubElement(svg, "g")
    for line, y in sorted(region.free_edges):
        (ax, ay) = px((line, y - 1))
        (bx, by) = px((line, y + 1))
        ET.SubElement(
            free_layer,
            "line",
            x1=f"{ax:.2f}",
            y1=f"{ay:.2f}",
            x2=f"{bx:.2f}",
            y2=f"{by:.2f}",
            stroke="#cc0000",
            **{"stroke-width": "1.6", "stroke-dasharray": "5,4"},
        )
    return svg


def _lozenge_outline(a: Cell, b: Cell) -> list[tuple[int, int]]:
    verts = list(dict.fromkeys(_cell_vertices(a) + _cell_vertices(b)))
    cx = sum(v[0] for v in verts) / 4
    cy = sum(v[1] for v in verts) / 4
    return sorted(verts, key=lambda v: math.atan2(v[1] - cy, v[0] - cx))


def write_region_svg(region: Region, path: str, tiling=None) -> None:
    svg = region_svg(region, tiling)
    ET.ElementTree(svg).write(path)

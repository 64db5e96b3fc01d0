"""SVG figure emission."""

import random
import xml.etree.ElementTree as ET

from pathtiles.lozenge import (
    Region,
    free_hook_region,
    holed_hexagon,
    mirrored_hook_region,
    sample_tiling,
)
from pathtiles.render import region_svg, write_region_svg

SVG_NS = "{http://www.w3.org/2000/svg}"


def test_empty_region_renders():
    svg = region_svg(Region([]))
    assert svg.tag == "svg"
    assert ET.tostring(svg)


def test_region_with_free_edges_and_weights(tmp_path):
    region = free_hook_region(1, (2,))
    svg = region_svg(region)
    dashed = [e for e in svg.iter() if e.get("stroke-dasharray")]
    assert len(dashed) == len(region.free_edges)

    two_sided = mirrored_hook_region(1, (2,))
    svg2 = region_svg(two_sided)
    ellipses = [e for e in svg2.iter() if e.tag.endswith("ellipse")]
    assert len(ellipses) == len(two_sided.weights) == 1

    out = tmp_path / "fig.svg"
    write_region_svg(two_sided, str(out))
    assert out.read_bytes().startswith(b"<svg")


def test_sampled_tiling_rendering(tmp_path):
    region = holed_hexagon(1, 2)
    tiling = sample_tiling(region, random.Random(11))
    covered = sorted(c for cover in tiling for c in cover)
    assert covered == region.sorted_cells()
    svg = region_svg(region, tiling)
    polygons = [e for e in svg.iter() if e.tag.endswith("polygon")]
    # Cell outlines plus one polygon per lozenge.
    assert len(polygons) == len(region.cells) + len(tiling)

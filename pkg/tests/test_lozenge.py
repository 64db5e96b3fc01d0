"""Regions, brute-force tilers, hook constructions, and hexagons."""

from fractions import Fraction

import pytest

from pathtiles.dag import Budget, BudgetExceeded
from pathtiles.lozenge import (
    Cell,
    Region,
    cell_partners,
    check_hexagon_factorization,
    check_square_identity,
    count_symmetric_tilings,
    count_tilings,
    double_staircase,
    double_staircase_free_product,
    double_staircase_tiling_product,
    doubled_region,
    free_hook_region,
    free_tiling_count_formula,
    holed_hexagon,
    is_horizontal_pair,
    iter_tilings,
    mirrored_hook_region,
    mirrored_tiling_gf_formula,
    punctured_hexagon,
    sample_tiling,
    shifted_wedge_hook,
    staircase_for_hexagon,
    wedge_hook,
)


def test_cell_validation():
    with pytest.raises(ValueError):
        Region([(0, 1, "L")])  # parity: L needs x + y even
    with pytest.raises(ValueError):
        Region([(0, 0, "X")])
    Region([(0, 0, "L"), (0, 1, "R")])


def test_cell_partners_are_mutual():
    for cell in (Cell(0, 0, "L"), Cell(0, 1, "R"), Cell(3, 2, "R")):
        for partner in cell_partners(cell):
            assert cell in cell_partners(partner)


def test_wedge_hook_sizes():
    assert len(wedge_hook(1)) == 4
    assert len(wedge_hook(7)) == 28
    assert len(shifted_wedge_hook(7)) == 28
    moved = wedge_hook(3) ^ shifted_wedge_hook(3)
    assert len(moved) == 2  # one cell removed, one added
    with pytest.raises(ValueError):
        wedge_hook(0)


def test_hook_is_tileable_strip():
    # A single chevron hook tiles uniquely into its 2n lozenges.
    for order in (1, 2, 3):
        assert count_tilings(Region(wedge_hook(order))) == 1


def test_empty_and_single_lozenge_regions():
    assert count_tilings(Region([])) == 1
    assert count_tilings(Region([(0, 0, "L"), (1, 0, "R")])) == 1


def test_free_boundary_validation():
    with pytest.raises(ValueError, match="boundary"):
        Region([(0, 0, "L"), (1, 0, "R")], free_edges=[(1, 0)])  # interior edge
    Region([(0, 0, "L")], free_edges=[(1, 0)])


def test_weight_validation():
    cells = [(0, 0, "L"), (1, 0, "R")]
    Region(cells, weights={frozenset({(0, 0, "L"), (1, 0, "R")}): Fraction(1, 2)})
    with pytest.raises(ValueError, match="not a lozenge"):
        Region(
            cells + [(0, 2, "L")],
            weights={frozenset({(0, 0, "L"), (0, 2, "L")}): Fraction(1, 2)},
        )


def test_known_hook_region_counts():
    assert count_tilings(free_hook_region(1, (2,))) == 3
    assert count_tilings(mirrored_hook_region(1, (2,))) == Fraction(9, 2)
    assert count_tilings(mirrored_hook_region(1, (1,))) == 2
    assert count_tilings(mirrored_hook_region(0, (1,))) == Fraction(1, 2)
    assert count_tilings(free_hook_region(0, (1,))) == 1
    # Deleting every hook label leaves uniquely tiled regions.
    assert count_tilings(free_hook_region(0, (1,), (1,))) == 1
    assert count_tilings(mirrored_hook_region(0, (1,), (1,))) == 1


def test_formula_routes_match_known_values():
    assert free_tiling_count_formula(1, (2,)) == 3
    assert mirrored_tiling_gf_formula(1, (2,)) == Fraction(9, 2)
    assert free_tiling_count_formula(0, (1,), (1,)) == 1
    assert mirrored_tiling_gf_formula(0, (1,), (1,)) == 1


def test_square_identity_spot_cases():
    assert check_square_identity(0, (1,), (1,))
    assert check_square_identity(1, (2,))
    assert check_square_identity(2, (3, 1))
    assert check_square_identity(1, (3, 2), (2,))


def test_large_shape_builds_and_matches_formula_identity():
    # The shape from the worked two-sided example: formula routes only.
    shape = (9, 8, 7, 4, 3, 1)
    removed = (2, 4)
    free = free_tiling_count_formula(6, shape, removed)
    two_sided = mirrored_tiling_gf_formula(6, shape, removed)
    assert free * free == 2 ** (6 - 2) * two_sided
    region = mirrored_hook_region(6, shape, removed)
    assert len(region.cells) % 2 == 0
    assert len(region.weights) == 4  # surviving half-weight lozenges
    free_region = free_hook_region(6, shape, removed)
    assert free_region.free_edges


def test_half_lozenges_are_horizontal_pairs():
    region = mirrored_hook_region(2, (3, 1))
    for pair in region.weights:
        a, b = sorted(pair)
        assert is_horizontal_pair(a, b)
        assert region.weights[pair] == Fraction(1, 2)


def test_removed_hook_validation():
    with pytest.raises(ValueError):
        free_hook_region(1, (2, 1), (3,))
    with pytest.raises(ValueError):
        free_hook_region(1, (1, 2))  # not strictly decreasing


def test_doubling_self_test():
    for shape, m in [((1,), 1), ((2,), 1), ((2, 1), 0), ((2, 1), 1)]:
        region = free_hook_region(m, shape)
        assert count_symmetric_tilings(doubled_region(region), "vertical") == count_tilings(region)


def test_hexagon_counts():
    assert count_tilings(holed_hexagon(1, 1)) == 3
    assert count_tilings(holed_hexagon(1, 2)) == 20
    assert count_tilings(holed_hexagon(1, 3)) == 175


def test_hexagon_symmetric_counts():
    small = holed_hexagon(1, 1)
    assert count_symmetric_tilings(small, "central") == 1
    assert count_symmetric_tilings(small, "both") == 1
    # Idempotence: filtering twice gives the same value.
    assert count_symmetric_tilings(small, "central") == count_symmetric_tilings(small, "central")
    box = holed_hexagon(1, 2)
    assert count_symmetric_tilings(box, "central") == 4
    # Vertically symmetric tilings of the 2x2x2 hexagon are the symmetric
    # boxed plane partitions: 10 by the classical product formula.
    assert count_symmetric_tilings(box, "vertical") == 10
    assert count_symmetric_tilings(box, "both") == 2


def test_hexagon_hole_validation():
    with pytest.raises(ValueError):
        holed_hexagon(1, 2, (2,))
    with pytest.raises(ValueError):
        punctured_hexagon(1, 2, 3)
    with pytest.raises(ValueError):
        punctured_hexagon(1, 2, 1, (2,))


def test_hexagon_factorization_cases():
    assert check_hexagon_factorization(1, 2, (), "a")
    assert check_hexagon_factorization(1, 3, (), "a")
    assert check_hexagon_factorization(1, 2, (1,), "a")
    assert check_hexagon_factorization(1, 3, (1,), "a")
    assert check_hexagon_factorization(1, 2, (), "b", 1)


def test_punctured_hexagon_structure():
    # Puncture of size 1 removes exactly one horizontal lozenge.
    plain = holed_hexagon(1, 3)
    punctured = punctured_hexagon(1, 2, 1)
    diff = plain.cells - punctured.cells
    assert len(diff) == 2
    a, b = sorted(diff)
    assert is_horizontal_pair(a, b)


def test_figure_scale_hexagons_build():
    from pathtiles.lozenge import _symmetry_maps

    # Hexagon with vertical sides 8, slants 10, holes at labels 2 and 4 on
    # both ends: 8mn + 2n^2 cells minus four size-2 triangles.
    big = holed_hexagon(4, 10, (2, 4))
    assert len(big.cells) == 8 * 4 * 10 + 2 * 10 * 10 - 4 * 4
    assert _symmetry_maps(big, "both")

    # Punctured odd hexagon (sides 8 and 13) with a size-3 center puncture.
    punct = punctured_hexagon(4, 7, 2, (2, 4))
    assert len(punct.cells) == 8 * 4 * 13 + 2 * 13 * 13 - 2 * 3 * 3 - 4 * 4
    assert _symmetry_maps(punct, "both")


def test_asymmetric_region_rejected():
    region = free_hook_region(1, (2,))
    with pytest.raises(ValueError, match="invariant"):
        count_symmetric_tilings(region, "central")


def test_tilings_cover_each_cell_once():
    region = mirrored_hook_region(1, (2,))
    total = 0
    for tiling in iter_tilings(region):
        covered = [c for cover in tiling for c in cover]
        assert sorted(covered) == region.sorted_cells()
        weight = 1
        for cover in tiling:
            weight = weight * region.weight_of(cover)
        total += weight
    assert total == Fraction(9, 2)


def test_sample_tiling_is_valid():
    import random

    region = holed_hexagon(1, 2)
    tiling = sample_tiling(region, random.Random(4))
    covered = sorted(c for cover in tiling for c in cover)
    assert covered == region.sorted_cells()


def test_budget_guard():
    region = holed_hexagon(2, 3)
    with pytest.raises(BudgetExceeded):
        count_tilings(region, Budget(10))


def test_double_staircase_shapes():
    assert double_staircase(1, 1) == (2,)
    assert double_staircase(3, 2) == (5, 3, 1)
    assert double_staircase(3, 0) == (3, 2, 1)
    assert double_staircase(0, 0) == ()


def test_double_staircase_products():
    assert double_staircase_free_product(1, 1, 1) == 3
    assert double_staircase_tiling_product(1, 1, 1) == Fraction(9, 2)
    assert double_staircase_free_product(0, 2, 1) == 1
    assert double_staircase_tiling_product(0, 2, 1) == Fraction(1, 4)
    for n in range(4):
        for k in range(n + 1):
            for m in range(4):
                shape = double_staircase(n, k)
                expected = double_staircase_tiling_product(m, n, k)
                got = mirrored_tiling_gf_formula(m, shape) if shape else Fraction(1)
                assert got == expected


def test_staircase_for_hexagon():
    assert staircase_for_hexagon(2) == (1,)
    assert staircase_for_hexagon(3) == (2,)
    assert staircase_for_hexagon(6) == (5, 3, 1)
    assert staircase_for_hexagon(7) == (6, 4, 2)


def test_region_json_round_trip():
    region = mirrored_hook_region(1, (2, 1))
    doc = region.to_json()
    back = Region.from_json(doc)
    assert back.cells == region.cells
    assert back.free_edges == region.free_edges
    assert back.weights == region.weights
    free = free_hook_region(1, (2,))
    back_free = Region.from_json(free.to_json())
    assert back_free.free_edges == free.free_edges
    assert count_tilings(back_free) == 3

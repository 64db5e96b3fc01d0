"""Triangular-lattice regions, lozenge tilings, and free boundaries.

Coordinates.  Lattice lines are vertical at integer x; the strip between
lines x and x+1 holds an alternating column of unit triangles.  A cell is
(x, y, orient): a left-pointing cell L(x, y) has its apex at vertex (x, y)
and its vertical side on line x+1 spanning heights y-1 .. y+1 (heights are
doubled so everything stays integral); a right-pointing cell R(x, y) has its
vertical side on line x spanning y-1 .. y+1 and its apex at (x+1, y).
Parity: x + y is even for L cells and odd for R cells.  A lozenge is any
edge-adjacent L/R pair; the three orientations need no separate encoding.

Free boundaries.  A free edge is a vertical boundary edge, identified by
(line, y).  A lozenge crossing it is represented as a half-lozenge covering
only the interior cell, with the full lozenge's weight.

Hook regions.  The one-sided region with a free right boundary on line 0 is
assembled from chevron-shaped hooks stacked down the axis; its two-sided
counterpart extends every hook across the axis and puts weight 1/2 on the
horizontal lozenge ending each shifted hook.  The squared free-boundary
count of the one-sided region equals 2^(surviving hooks) times the weighted
count of the two-sided one, and both sides are also evaluated through
maximal-minor sums and determinants of binomial path matrices.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import NamedTuple

from .dag import Budget
from .linalg import ExactMatrix, determinant, sum_max_minors, upper_twos


class Cell(NamedTuple):
    x: int
    y: int
    orient: str  # "L" or "R"


def _L(x: int, y: int) -> Cell:
    return Cell(x, y, "L")


def _R(x: int, y: int) -> Cell:
    return Cell(x, y, "R")


def _check_cell(cell: Cell) -> None:
    if cell.orient not in ("L", "R"):
        raise ValueError(f"bad orientation {cell.orient!r}")
    want_even = cell.orient == "L"
    if ((cell.x + cell.y) % 2 == 0) != want_even:
        raise ValueError(f"cell {cell} violates the lattice parity")


def cell_partners(cell: Cell) -> tuple[Cell, Cell, Cell]:
    """The up-to-three cells this cell can form a lozenge with."""
    x, y, o = cell
    if o == "L":
        return (_R(x + 1, y), _R(x, y + 1), _R(x, y - 1))
    return (_L(x - 1, y), _L(x, y + 1), _L(x, y - 1))


def cell_vertical_side(cell: Cell) -> tuple[int, int]:
    """The (line, center-height) of the cell's vertical side."""
    return (cell.x + 1, cell.y) if cell.orient == "L" else (cell.x, cell.y)


def is_horizontal_pair(a: Cell, b: Cell) -> bool:
    """Whether two cells form a horizontal lozenge (shared vertical side)."""
    return a.orient != b.orient and cell_vertical_side(a) == cell_vertical_side(b)


class Region:
    """A finite set of cells with lozenge weights and optional free edges."""

    def __init__(self, cells, free_edges=(), weights=None):
        self.cells = frozenset(Cell(*c) for c in cells)
        for cell in self.cells:
            _check_cell(cell)
        self.free_edges = frozenset((int(a), int(b)) for a, b in free_edges)
        for line, y in self.free_edges:
            touching = [c for c in (_L(line - 1, y), _R(line, y)) if c in self.cells]
            if len(touching) != 1:
                raise ValueError(f"free edge ({line},{y}) is not on the region boundary")
        self.weights: dict[frozenset, Fraction] = {}
        for key, value in (weights or {}).items():
            group = frozenset(Cell(*c) for c in key)
            if not group <= self.cells:
                raise ValueError(f"weighted lozenge {sorted(group)} not inside the region")
            if len(group) == 2:
                a, b = sorted(group)
                if b not in cell_partners(a):
                    raise ValueError(f"weighted pair {sorted(group)} is not a lozenge")
            elif len(group) != 1:
                raise ValueError("weight keys must cover one or two cells")
            self.weights[group] = Fraction(value)

    def __len__(self) -> int:
        return len(self.cells)

    def weight_of(self, cover: frozenset):
        return self.weights.get(cover, 1)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def to_json(self) -> dict:
        doc = {
            "cells": [[c.x, c.y, c.orient] for c in self.sorted_cells()],
            "free_edges": [list(e) for e in sorted(self.free_edges)],
            "weights": [
                {"cells": [[c.x, c.y, c.orient] for c in sorted(k)], "w": str(w)}
                for k, w in sorted(self.weights.items(), key=lambda kv: sorted(kv[0]))
            ],
        }
        return doc

    @classmethod
    def from_json(cls, doc) -> "Region":
        return cls(
            [tuple(c) for c in doc.get("cells", [])],
            [tuple(e) for e in doc.get("free_edges", [])],
            {
                frozenset(tuple(c) for c in item["cells"]): Fraction(item["w"])
                for item in doc.get("weights", [])
            },
        )


# ---------------------------------------------------------------------------
# Brute-force tiling enumeration (the oracle)
# ---------------------------------------------------------------------------


def _tiling_plan(region: Region):
    """Precompute scan order, partner indices, and weights for backtracking."""
    cells = region.sorted_cells()
    index = {c: i for i, c in enumerate(cells)}
    partners = []
    for c in cells:
        opts = []
        for p in cell_partners(c):
            j = index.get(p)
            if j is not None:
                opts.append((j, region.weight_of(frozenset((c, p)))))
        if cell_vertical_side(c) in region.free_edges:
            opts.append((None, region.weight_of(frozenset((c,)))))
        partners.append(opts)
    return cells, partners


def count_tilings(region: Region, budget: Budget | None = None):
    """Weighted number of tilings, by backtracking over cells in scan order."""
    if budget is None:
        budget = Budget()
    cells, partners = _tiling_plan(region)
    n = len(cells)
    covered = bytearray(n)

    def rec(pos: int, acc):
        budget.spend()
        while pos < n and covered[pos]:
            pos += 1
        if pos == n:
            return acc
        total = 0
        covered[pos] = 1
        for j, w in partners[pos]:
            if j is None:
                total = total + rec(pos + 1, acc * w)
            elif j > pos and not covered[j]:
                covered[j] = 1
                total = total + rec(pos + 1, acc * w)
                covered[j] = 0
        covered[pos] = 0
        return total

    return rec(0, 1)


def iter_tilings(region: Region, budget: Budget | None = None):
    """Yield every tiling as a frozenset of covers (cell pairs or free halves)."""
    if budget is None:
        budget = Budget()
    cells, partners = _tiling_plan(region)
    n = len(cells)
    covered = bytearray(n)
    stack: list[frozenset] = []

    def rec(pos: int):
        budget.spend()
        while pos < n and covered[pos]:
            pos += 1
        if pos == n:
            yield frozenset(stack)
            return
        covered[pos] = 1
        for j, _ in partners[pos]:
            if j is None:
                stack.append(frozenset((cells[pos],)))
                yield from rec(pos + 1)
                stack.pop()
            elif j > pos and not covered[j]:
                covered[j] = 1
                stack.append(frozenset((cells[pos], cells[j])))
                yield from rec(pos + 1)
                stack.pop()
                covered[j] = 0
        covered[pos] = 0

    yield from rec(0)


def sample_tiling(region: Region, rng, budget: Budget | None = None):
    """First tiling found by a depth-first search with shuffled branches."""
    if budget is None:
        budget = Budget()
    cells, partners = _tiling_plan(region)
    n = len(cells)
    covered = bytearray(n)
    stack: list[frozenset] = []

    def rec(pos: int):
        budget.spend()
        while pos < n and covered[pos]:
            pos += 1
        if pos == n:
            return True
        options = list(partners[pos])
        rng.shuffle(options)
        covered[pos] = 1
        for j, _ in options:
            if j is None:
                stack.append(frozenset((cells[pos],)))
                if rec(pos + 1):
                    return True
                stack.pop()
            elif j > pos and not covered[j]:
                covered[j] = 1
                stack.append(frozenset((cells[pos], cells[j])))
                if rec(pos + 1):
                    return True
                stack.pop()
                covered[j] = 0
        covered[pos] = 0
        return False

    if not rec(0):
        raise ValueError("region has no tiling")
    return list(stack)


# ---------------------------------------------------------------------------
# Symmetric tilings
# ---------------------------------------------------------------------------


def _flip(orient: str) -> str:
    return "R" if orient == "L" else "L"


def _symmetry_maps(region: Region, mode: str):
    xs = [c.x for c in region.cells]
    ys = [c.y for c in region.cells]
    sx = min(xs) + max(xs)
    sy = min(ys) + max(ys)

    def central(c: Cell) -> Cell:
        return Cell(sx - c.x, sy - c.y, _flip(c.orient))

    def vertical(c: Cell) -> Cell:
        return Cell(sx - c.x, c.y, _flip(c.orient))

    if mode == "central":
        maps = [central]
    elif mode == "vertical":
        maps = [vertical]
    elif mode == "both":
        maps = [central, vertical]
    else:
        raise ValueError("mode must be 'central', 'vertical', or 'both'")

    for f in maps:
        if {f(c) for c in region.cells} != region.cells:
            raise ValueError(f"region is not invariant under the {mode} symmetry")
        mapped_free = {_map_edge(f, e) for e in region.free_edges}
        if mapped_free != set(region.free_edges):
            raise ValueError("free edges are not invariant under the symmetry")
        mapped_weights = {frozenset(f(c) for c in k): w for k, w in region.weights.items()}
        if mapped_weights != region.weights:
            raise ValueError("lozenge weights are not invariant under the symmetry")
    return maps


def _map_edge(cell_map, edge):
    # Transport a vertical edge through a cell map via the cell that owns it.
    line, y = edge
    probe = _L(line - 1, y) if (line - 1 + y) % 2 == 0 else _R(line, y)
    return cell_vertical_side(cell_map(probe))


def count_symmetric_tilings(region: Region, mode: str, budget: Budget | None = None):
    """Number of tilings fixed by the chosen symmetries of the region."""
    maps = _symmetry_maps(region, mode)
    total = 0
    for tiling in iter_tilings(region, budget):
        if all(frozenset(frozenset(f(c) for c in cover) for cover in tiling) == tiling for f in maps):
            weight = 1
            for cover in tiling:
                weight = weight * region.weight_of(cover)
            total = total + weight
    return total


def reflect_cells(cells, line: int = 0):
    """Mirror cells across the vertical lattice line x = line."""
    out = set()
    for c in cells:
        out.add(Cell(2 * line - c.x - 1, c.y, _flip(c.orient)))
    return frozenset(out)


def doubled_region(region: Region, line: int = 0) -> Region:
    """Union of a region with its mirror image; free edges become interior."""
    cells = set(region.cells) | set(reflect_cells(region.cells, line))
    weights = dict(region.weights)
    for key, w in region.weights.items():
        weights[frozenset(reflect_cells(key, line))] = w
    return Region(cells, (), weights)


# ---------------------------------------------------------------------------
# Hook regions with a free boundary and their two-sided counterparts
# ---------------------------------------------------------------------------


def validate_strict_partition(shape) -> tuple[int, ...]:
    shape = tuple(int(p) for p in shape)
    if any(p < 1 for p in shape):
        raise ValueError("parts must be positive")
    if any(a <= b for a, b in zip(shape, shape[1:])):
        raise ValueError(f"parts must strictly decrease: {shape}")
    return shape


def wedge_hook(order: int, level: int = 0) -> frozenset[Cell]:
    """Chevron hook of the given order: 2*order lozenges peaking on line 0."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if level % 2:
        raise ValueError("level must be even")
    cells = set()
    for c in range(-order, 0):
        cells.add(_R(c, level + c + 1))
        cells.add(_L(c, level + c + 2))
    for c in range(0, order):
        cells.add(_L(c, level - c))
        cells.add(_R(c, level - c + 1))
    return frozenset(cells)


def shifted_wedge_hook(order: int, level: int = 0) -> frozenset[Cell]:
    """Chevron hook with its leftmost cell moved to the right end."""
    cells = set(wedge_hook(order, level))
    cells.remove(_R(-order, level - order + 1))
    cells.add(_R(order, level - order + 1))
    return frozenset(cells)


def _hook_layout(m: int, shape):
    """Hook orders/levels plus labeled cells of the shifted hooks.

    Plain hooks of order shape[0] + 1 sit on top, then one shifted hook per
    part, all stepping down one lozenge height per hook.
    """
    shape = validate_strict_partition(shape)
    k = len(shape)
    plain = [(shape[0] + 1, 2 * (k + m - t)) for t in range(1, m + 1)] if k else []
    shifted = []
    for i, part in enumerate(shape, start=1):
        level = 2 * (k - i)
        left_label = _L(-part, level - part + 2)
        right_label = _R(part, level - part + 1)
        half_pair = frozenset((_L(part - 1, level - part + 1), right_label))
        shifted.append((part, level, left_label, right_label, half_pair))
    return plain, shifted


def _strip_deletion(m: int, shape) -> set[Cell]:
    # The leftmost strip is forced and is dropped from the region (only the
    # plain hooks reach it, so this applies when m >= 1).
    if m < 1 or not shape:
        return set()
    c = -(shape[0] + 1)
    return {_R(c, 2 * (len(shape) + m - t) + c + 1) for t in range(1, m + 1)} | {
        _L(c, 2 * (len(shape) + m - t) + c + 2) for t in range(1, m + 1)
    }


def free_hook_region(m: int, shape, removed=()) -> Region:
    """One-sided hook region with a free boundary along line 0.

    removed lists the 1-based shifted hooks whose labeled left cell is
    deleted.
    """
    shape = validate_strict_partition(shape)
    removed = _validate_removed(removed, len(shape))
    plain, shifted = _hook_layout(m, shape)
    cells: set[Cell] = set()
    for order, level in plain:
        cells |= {c for c in wedge_hook(order, level) if c.x < 0}
    for i, (order, level, left_label, _right, _half) in enumerate(shifted, start=1):
        part = {c for c in shifted_wedge_hook(order, level) if c.x < 0}
        if i in removed:
            part.discard(left_label)
        cells |= part
    cells -= _strip_deletion(m, shape)
    free = {(0, c.y) for c in cells if c.orient == "L" and c.x == -1}
    return Region(cells, free, {})


def mirrored_hook_region(m: int, shape, removed=()) -> Region:
    """Two-sided hook region: no free boundary, half-weighted right ends.

    Each shifted hook keeps a weight-1/2 horizontal lozenge at its right end;
    for hooks in removed, both labeled cells are deleted and the half-weight
    lozenge disappears with them.
    """
    shape = validate_strict_partition(shape)
    removed = _validate_removed(removed, len(shape))
    plain, shifted = _hook_layout(m, shape)
    cells: set[Cell] = set()
    weights: dict[frozenset, Fraction] = {}
    for order, level in plain:
        cells |= wedge_hook(order, level)
    for i, (order, level, left_label, right_label, half_pair) in enumerate(shifted, start=1):
        part = set(shifted_wedge_hook(order, level))
        if i in removed:
            part.discard(left_label)
            part.discard(right_label)
        else:
            weights[half_pair] = Fraction(1, 2)
        cells |= part
    cells -= _strip_deletion(m, shape)
    return Region(cells, (), weights)


def _validate_removed(removed, k: int) -> frozenset[int]:
    removed = frozenset(int(i) for i in removed)
    if not removed <= set(range(1, k + 1)):
        raise ValueError(f"removed hooks {sorted(removed)} out of range 1..{k}")
    return removed


def binomial_path_matrix(m: int, shape, removed=()) -> ExactMatrix:
    """Path matrix of the lattice realization of the free-boundary region.

    Row i (a surviving hook), column j in 1..m+k carries
    C(part_i - 1 + m + i - j, m + i - j).
    """
    shape = validate_strict_partition(shape)
    k = len(shape)
    removed = _validate_removed(removed, k)
    rows = []
    for i, part in enumerate(shape, start=1):
        if i in removed:
            continue
        row = []
        for j in range(1, m + k + 1):
            down = m + i - j
            row.append(math.comb(part - 1 + down, down) if down >= 0 else 0)
        rows.append(row)
    if not rows:
        return ExactMatrix.zero(0, m + k)
    return ExactMatrix.from_rows(rows)


def free_tiling_count_formula(m: int, shape, removed=()):
    """Free-boundary tiling count as a sum of maximal minors."""
    return sum_max_minors(binomial_path_matrix(m, shape, removed))


def mirrored_tiling_gf_formula(m: int, shape, removed=()):
    """Two-sided tiling generating function as det[M (U/2) M^T]."""
    shape = validate_strict_partition(shape)
    z = binomial_path_matrix(m, shape, removed)
    u = Fraction(1, 2) * upper_twos(z.cols)
    return determinant(z * u * z.transpose())


def square_identity_values(m: int, shape, removed=(), budget: Budget | None = None) -> dict:
    """All four evaluation routes of the squared free-boundary identity."""
    shape = validate_strict_partition(shape)
    removed = _validate_removed(removed, len(shape))
    if budget is None:
        budget = Budget()
    return {
        "free_formula": free_tiling_count_formula(m, shape, removed),
        "free_tiler": count_tilings(free_hook_region(m, shape, removed), budget),
        "mirrored_formula": mirrored_tiling_gf_formula(m, shape, removed),
        "mirrored_tiler": count_tilings(mirrored_hook_region(m, shape, removed), budget),
        "factor": 2 ** (len(shape) - len(removed)),
    }


def check_square_identity(m: int, shape, removed=(), budget: Budget | None = None) -> bool:
    """Whether free^2 == 2^(surviving hooks) * two-sided, on every route."""
    v = square_identity_values(m, shape, removed, budget)
    return (
        v["free_formula"] == v["free_tiler"]
        and v["mirrored_formula"] == v["mirrored_tiler"]
        and v["free_formula"] ** 2 == v["factor"] * v["mirrored_formula"]
    )


# ---------------------------------------------------------------------------
# Double staircase product formulas
# ---------------------------------------------------------------------------


def double_staircase(n: int, k: int) -> tuple[int, ...]:
    """The strict partition (n, ..., 1) + (k, ..., 1), with n parts."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return tuple(
        (n + k + 2 - 2 * i) if i <= k else (n + 1 - i) for i in range(1, n + 1)
    )


def double_staircase_free_product(m: int, n: int, k: int) -> Fraction:
    """Product formula for the free-boundary count of the double staircase."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    value = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            value *= Fraction(m + i + j - 1, i + j - 1)
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            value *= Fraction(m + i + j, i + j)
    return value


def double_staircase_tiling_product(m: int, n: int, k: int) -> Fraction:
    """Product formula for the two-sided double-staircase tiling GF."""
    free = double_staircase_free_product(m, n, k)
    return free * free / 2**n


# ---------------------------------------------------------------------------
# Hexagons with holes and the punctured hexagon
# ---------------------------------------------------------------------------


def _hexagon_cells(m: int, half_side: int) -> set[Cell]:
    """Hexagon with vertical sides 2m and slant sides half_side.

    Spans strips 0 .. 2*half_side - 1 with its horizontal symmetry axis at
    height 0 and vertical symmetry axis on line half_side.
    """
    n = half_side
    cells: set[Cell] = set()
    for c in range(0, n):
        for y in range(-(2 * m + c), 2 * m + c + 1):
            if (c + y) % 2 == 0:
                cells.add(_L(c, y))
            elif abs(y) <= 2 * m + c - 1:
                cells.add(_R(c, y))
    for c in range(n, 2 * n):
        d = 2 * n - 1 - c
        for y in range(-(2 * m + d), 2 * m + d + 1):
            if (c + y) % 2 == 1:
                cells.add(_R(c, y))
            elif abs(y) <= 2 * m + d - 1:
                cells.add(_L(c, y))
    return cells


def _hole_cells(line: int, side: str) -> set[Cell]:
    """Cells of the size-2 triangle containing the axis lozenge at a line."""
    if side == "left":
        return {_L(line - 1, 0), _R(line, 0), _L(line, -1), _L(line, 1)}
    return {_L(line - 1, 0), _R(line, 0), _R(line - 1, -1), _R(line - 1, 1)}


def holed_hexagon(m: int, n: int, holes=()) -> Region:
    """Hexagon with sides (2m, n, n, 2m, n, n) minus mirrored triangular holes.

    The n horizontal lozenges on the horizontal axis are labeled inward from
    both ends; holes lists the labels (1-based, at most n // 2) punched out
    as size-2 triangles on both sides.
    """
    if m < 1 or n < 1:
        raise ValueError("hexagon sides must be positive")
    holes = frozenset(int(h) for h in holes)
    if not holes <= set(range(1, n // 2 + 1)):
        raise ValueError(f"hole labels {sorted(holes)} out of range 1..{n // 2}")
    cells = _hexagon_cells(m, n)
    for h in holes:
        cells -= _hole_cells(2 * h - 1, "left")
        cells -= _hole_cells(2 * n - 2 * h + 1, "right")
    return Region(cells, (), {})


def _size_triangle_cells(apex_line: int, size: int, pointing: str) -> set[Cell]:
    """A size-s triangle on the axis: apex on apex_line, base size*2 tall."""
    cells: set[Cell] = set()
    for d in range(size):
        if pointing == "left":
            c = apex_line + d
            for y in range(-d, d + 1):
                if (c + y) % 2 == 0:
                    cells.add(_L(c, y))
                elif abs(y) <= d - 1:
                    cells.add(_R(c, y))
        else:
            c = apex_line - 1 - d
            for y in range(-d, d + 1):
                if (c + y) % 2 == 1:
                    cells.add(_R(c, y))
                elif abs(y) <= d - 1:
                    cells.add(_L(c, y))
    return cells


def punctured_hexagon(m: int, n: int, x: int, holes=()) -> Region:
    """Odd hexagon (sides 2m and 2n-1) minus a centered horizontal lozenge
    of size 2x-1, minus mirrored triangular holes.

    After the puncture, 2(n-x) horizontal lozenges remain on the axis,
    labeled inward from both ends; holes may use labels up to n - x.
    """
    if m < 1 or n < 1 or not 1 <= x <= n:
        raise ValueError("need m, n >= 1 and 1 <= x <= n")
    holes = frozenset(int(h) for h in holes)
    if not holes <= set(range(1, n - x + 1)):
        raise ValueError(f"hole labels {sorted(holes)} out of range 1..{n - x}")
    big = 2 * n - 1
    s = 2 * x - 1
    cells = _hexagon_cells(m, big)
    cells -= _size_triangle_cells(big - s, s, "left")
    cells -= _size_triangle_cells(big + s, s, "right")
    for h in holes:
        cells -= _hole_cells(2 * h - 1, "left")
        cells -= _hole_cells(2 * big - 2 * h + 1, "right")
    return Region(cells, (), {})


def check_hexagon_factorization(m: int, n: int, holes=(), variant: str = "a", x: int | None = None, budget: Budget | None = None) -> bool:
    """Whether the centrally symmetric tiling count is the square of the
    count of tilings with both central and vertical symmetry."""
    if variant == "a":
        region = holed_hexagon(m, n, holes)
    elif variant == "b":
        if x is None:
            raise ValueError("variant 'b' needs the puncture parameter x")
        region = punctured_hexagon(m, n, x, holes)
    else:
        raise ValueError("variant must be 'a' or 'b'")
    central = count_symmetric_tilings(region, "central", budget)
    both = count_symmetric_tilings(region, "both", budget)
    return central == both * both


def staircase_for_hexagon(n: int) -> tuple[int, ...]:
    """Hook shape whose regions are the symmetric quotients of the hexagon."""
    top = n - 1
    return tuple(range(top, 0, -2)) if top >= 1 else ()


def staircase_for_punctured_hexagon(n: int, x: int) -> tuple[int, ...]:
    return tuple(range(2 * n - 2, 2 * x - 1, -2))

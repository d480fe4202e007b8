"""Raster grid primitives: points, labeled cell regions, and region maps.

A region is a set of unit grid cells addressed by integer ``(col, row)``
pairs.  Cell ``(c, r)`` covers the square ``[c, c+1) x [r, r+1)`` and has
its center at ``(c + 0.5, r + 0.5)``.  The origin sits at the lower-left
map corner, x grows rightward with columns, y grows upward with rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

Cell = tuple[int, int]


@dataclass(frozen=True)
class Point:
    """A planar coordinate pair in map units."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True, eq=False)
class RasterRegion:
    """A labeled, non-empty set of unit grid cells."""

    id: int
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        if self.id < 1:
            raise ValueError(f"region id must be >= 1, got {self.id}")
        if not self.cells:
            raise ValueError("empty region")
        object.__setattr__(self, "cells", frozenset((int(c), int(r)) for c, r in self.cells))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RasterRegion):
            return NotImplemented
        return self.id == other.id and self.cells == other.cells

    def __hash__(self) -> int:
        return hash((self.id, self.cells))

    @cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        """Cells in canonical (col, row) order; fixes all tie-break scans."""
        return tuple(sorted(self.cells))

    @cached_property
    def centers(self) -> np.ndarray:
        """(n, 2) float array of cell centers in canonical order."""
        arr = np.array(self.sorted_cells, dtype=float)
        return arr + 0.5

    def translated(self, dx: int, dy: int) -> "RasterRegion":
        return RasterRegion(self.id, frozenset((c + dx, r + dy) for c, r in self.cells))


@dataclass(frozen=True)
class RegionMap:
    """A width x height grid partitioned into disjoint labeled regions."""

    width: int
    height: int
    regions: tuple[RasterRegion, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("map dimensions must be positive")
        object.__setattr__(self, "regions", tuple(self.regions))

    def region(self, region_id: int) -> RasterRegion:
        for reg in self.regions:
            if reg.id == region_id:
                return reg
        raise KeyError(f"no region with id {region_id}")


@dataclass(frozen=True)
class Violation:
    """One structural defect found by :func:`validate`."""

    kind: str
    message: str


def contains(region: RasterRegion, p: Point) -> bool:
    """True iff ``p`` falls in one of the region's unit cells.

    The owning cell is ``(floor(x), floor(y))``; a point exactly on the
    map's right/top boundary therefore belongs to no cell.
    """
    return (math.floor(p.x), math.floor(p.y)) in region.cells


def area(region: RasterRegion) -> float:
    """Region area in map units (one unit per cell)."""
    return float(len(region.cells))


def centroid(region: RasterRegion) -> Point:
    """Mean of all cell centers.  May fall outside a concave region."""
    n = len(region.cells)
    sx = sum(c for c, _ in region.cells)
    sy = sum(r for _, r in region.cells)
    # exact: (sum + n/2) / n with integer sums keeps half-integer means exact
    return Point((2 * sx + n) / (2 * n), (2 * sy + n) / (2 * n))


def validate(region_map: RegionMap) -> list[Violation]:
    """Check all RegionMap invariants, returning one record per failure."""
    violations: list[Violation] = []
    seen_ids: set[int] = set()
    owner: dict[Cell, int] = {}
    for reg in region_map.regions:
        if reg.id in seen_ids:
            violations.append(Violation("duplicate_id", f"region id {reg.id} used more than once"))
        seen_ids.add(reg.id)
        if not reg.cells:
            violations.append(Violation("empty_region", f"region {reg.id} has no cells"))
            continue
        for cell in reg.sorted_cells:
            c, r = cell
            if not (0 <= c < region_map.width and 0 <= r < region_map.height):
                violations.append(
                    Violation("out_of_bounds", f"region {reg.id} cell {cell} outside {region_map.width}x{region_map.height} map")
                )
            if cell in owner and owner[cell] != reg.id:
                violations.append(
                    Violation("overlap", f"cell {cell} claimed by regions {owner[cell]} and {reg.id}")
                )
            else:
                owner[cell] = reg.id
    expected = set(range(1, len(region_map.regions) + 1))
    if seen_ids != expected and not any(v.kind == "duplicate_id" for v in violations):
        violations.append(
            Violation("noncontiguous_ids", f"region ids {sorted(seen_ids)} are not contiguous from 1")
        )
    return violations


def _hull_doubled(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Andrew monotone chain on integer points (doubled cell-center coords)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _in_hull_doubled(hull: list[tuple[int, int]], q: tuple[int, int]) -> bool:
    """Point-in-convex-polygon (boundary counts as inside), exact integers."""
    if not hull:
        return False
    if len(hull) == 1:
        return q == hull[0]
    if len(hull) == 2:
        (ax, ay), (bx, by) = hull
        cross = (bx - ax) * (q[1] - ay) - (by - ay) * (q[0] - ax)
        if cross != 0:
            return False
        dot = (q[0] - ax) * (bx - ax) + (q[1] - ay) * (by - ay)
        return 0 <= dot <= (bx - ax) ** 2 + (by - ay) ** 2
    for i in range(len(hull)):
        ax, ay = hull[i]
        bx, by = hull[(i + 1) % len(hull)]
        if (bx - ax) * (q[1] - ay) - (by - ay) * (q[0] - ax) < 0:
            return False
    return True


def is_convex(region: RasterRegion) -> bool:
    """True iff the region equals the rasterization of its own convex hull.

    Rasterization test: every grid cell whose center lies in the convex
    hull of the region's cell centers (boundary included) must belong to
    the region.  All arithmetic is exact on doubled integer coordinates.
    """
    doubled = [(2 * c + 1, 2 * r + 1) for c, r in region.cells]
    hull = _hull_doubled(doubled)
    cols = [c for c, _ in region.cells]
    rows = [r for _, r in region.cells]
    cell_set = region.cells
    for c in range(min(cols), max(cols) + 1):
        for r in range(min(rows), max(rows) + 1):
            if (c, r) not in cell_set and _in_hull_doubled(hull, (2 * c + 1, 2 * r + 1)):
                return False
    return True

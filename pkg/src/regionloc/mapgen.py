"""Random map generation and canonical special-case fixtures.

Generated maps place disjoint rasterized convex blobs (axis-aligned
ellipses) and then carve channels into a chosen fraction of them to force
non-convexity.  Rasterizing a convex set keeps the cell set convex under
the hull-rasterization test, so regions that are not carved are convex by
construction.  Generation is fully deterministic per seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .grid import Cell, RasterRegion, RegionMap, is_convex

_PLACEMENT_TRIES = 400


@dataclass(frozen=True)
class GenConfig:
    width: int = 200
    height: int = 200
    region_count: int = 10
    concavity_bias: float = 0.0
    demand_range: tuple[int, int] = (1, 10)
    seed: int = 0

    def __post_init__(self) -> None:
        if self.width < 8 or self.height < 8:
            raise ValueError("map must be at least 8x8")
        if self.region_count < 1:
            raise ValueError("region_count must be >= 1")
        if not 0.0 <= self.concavity_bias <= 1.0:
            raise ValueError("concavity_bias must lie in [0, 1]")
        lo, hi = self.demand_range
        if lo < 1 or hi < lo:
            raise ValueError("demand_range must satisfy 1 <= low <= high")


def _rasterize_ellipse(cx: float, cy: float, rx: float, ry: float) -> set[Cell]:
    cells: set[Cell] = set()
    for c in range(math.floor(cx - rx), math.ceil(cx + rx) + 1):
        for r in range(math.floor(cy - ry), math.ceil(cy + ry) + 1):
            x = c + 0.5
            y = r + 0.5
            if ((x - cx) / rx) ** 2 + ((y - cy) / ry) ** 2 <= 1.0:
                cells.add((c, r))
    return cells


def _interior_cells(cells: set[Cell]) -> list[Cell]:
    """Cells whose 8 neighbors are all present, in canonical order."""
    out = []
    for c, r in sorted(cells):
        if all((c + dc, r + dr) in cells for dc in (-1, 0, 1) for dr in (-1, 0, 1)):
            out.append((c, r))
    return out


def _carve(cells: set[Cell], rng: random.Random) -> set[Cell]:
    """Remove a straight channel from an interior cell out of the blob.

    The channel's innermost cell stays strictly inside the convex hull of
    the remaining centers, so the result is guaranteed non-convex.
    """
    interior = _interior_cells(cells)
    start = rng.choice(interior)
    directions = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    rng.shuffle(directions)
    for dc, dr in directions:
        channel = []
        c, r = start
        while (c, r) in cells:
            channel.append((c, r))
            c += dc
            r += dr
        remaining = cells - set(channel)
        if len(remaining) >= 4 and _interior_cells(remaining):
            return remaining
    # fall back to punching a hole at the interior cell only
    return cells - {start}


def generate(config: GenConfig) -> tuple[RegionMap, list[int]]:
    """Generate a valid map of disjoint regions plus one demand per region."""
    rng = random.Random(config.seed)
    w, h = config.width, config.height
    r_hi = max(2.6, min(w, h) / 10.0)
    r_lo = 2.2
    claimed: set[Cell] = set()
    blobs: list[set[Cell]] = []
    for _ in range(config.region_count):
        placed = False
        for _ in range(_PLACEMENT_TRIES):
            rx = rng.uniform(r_lo, r_hi)
            ry = rng.uniform(r_lo, r_hi)
            cx = rng.uniform(rx + 0.5, w - rx - 0.5)
            cy = rng.uniform(ry + 0.5, h - ry - 0.5)
            cells = _rasterize_ellipse(cx, cy, rx, ry)
            if len(cells) < 9 or not _interior_cells(cells):
                continue
            if cells & claimed:
                continue
            if not all(0 <= c < w and 0 <= r < h for c, r in cells):
                continue
            claimed |= cells
            blobs.append(cells)
            placed = True
            break
        if not placed:
            raise RuntimeError("placement failed")
    n_concave = math.ceil(config.concavity_bias * config.region_count)
    concave_idx = set(rng.sample(range(config.region_count), n_concave))
    regions = []
    for i, cells in enumerate(blobs):
        if i in concave_idx:
            cells = _carve(cells, rng)
        regions.append(RasterRegion(i + 1, frozenset(cells)))
    for i in concave_idx:
        assert not is_convex(regions[i]), "carving failed to break convexity"
    lo, hi = config.demand_range
    demands = [rng.randint(lo, hi) for _ in range(config.region_count)]
    return RegionMap(w, h, tuple(regions)), demands


def _cells(spans: list[tuple[int, int, int, int]]) -> frozenset[Cell]:
    """Inclusive (c0, c1, r0, r1) rectangles unioned into a cell set."""
    out: set[Cell] = set()
    for c0, c1, r0, r1 in spans:
        for c in range(c0, c1 + 1):
            for r in range(r0, r1 + 1):
                out.add((c, r))
    return frozenset(out)


def fixture(case_id: int) -> RegionMap:
    """Canonical special-case maps.

    Case 1: a square ring (region 1) around a block (region 2); both
    centroids coincide inside region 2, so centroid-based distance is 0
    while the in-region representatives stay apart.

    Case 2: a concave bracket (region 2) between two blocks; its centroid
    is pulled toward region 1 while its in-region representative sits by
    region 3, flipping the nearest-region ordering.

    Case 3: two interlocked point-symmetric hooks sharing the same exact
    centroid; their in-region representatives land on adjacent cells at
    the shared center, as close as the raster allows.
    """
    if case_id == 1:
        ring = _cells([(10, 14, 10, 14)]) - _cells([(11, 13, 11, 13)])
        block = _cells([(11, 13, 11, 13)])
        return RegionMap(25, 25, (RasterRegion(1, ring), RasterRegion(2, block)))
    if case_id == 2:
        left = _cells([(6, 9, 4, 6)])
        bracket = _cells([(20, 20, 0, 10), (10, 19, 0, 0), (10, 19, 10, 10)])
        right = _cells([(24, 27, 4, 6)])
        return RegionMap(
            30, 12, (RasterRegion(1, left), RasterRegion(2, bracket), RasterRegion(3, right))
        )
    if case_id == 3:
        hook_h = _cells([(7, 10, 9, 9), (9, 12, 10, 10), (7, 7, 10, 10), (12, 12, 9, 9)])
        hook_v = _cells([(9, 9, 5, 8), (10, 10, 11, 14), (8, 8, 5, 5), (11, 11, 14, 14)])
        return RegionMap(20, 20, (RasterRegion(1, hook_h), RasterRegion(2, hook_v)))
    raise ValueError(f"unknown fixture case: {case_id}")

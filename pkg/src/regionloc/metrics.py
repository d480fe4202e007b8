"""Point and region distances, plus region-to-region distance matrices.

Regions are compared through their representative points: the distance
between two regions is the euclidean distance between the two in-region
representatives.  General l_p is exposed at the point level only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import Point, RasterRegion, RegionMap
from .representative import ObjectiveMode, representative_point


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric, zero-diagonal matrix of pairwise region distances."""

    n: int
    entries: np.ndarray
    mode: ObjectiveMode
    p: float = 2.0

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=float)
        if entries.shape != (self.n, self.n):
            raise ValueError(f"expected {self.n}x{self.n} matrix, got {entries.shape}")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def max_distance(self) -> float:
        return float(self.entries.max()) if self.n else 0.0


def lp_distance(q: Point, r: Point, p: float) -> float:
    """l_p distance between two planar points, p >= 1."""
    if p < 1:
        raise ValueError(f"invalid norm exponent: {p}")
    dx = abs(q.x - r.x)
    dy = abs(q.y - r.y)
    return float((dx**p + dy**p) ** (1.0 / p))


def region_distance(s1: RasterRegion, s2: RasterRegion, mode: ObjectiveMode) -> float:
    """Euclidean distance between the two regions' representative points."""
    p1 = representative_point(s1, mode).point
    p2 = representative_point(s2, mode).point
    return lp_distance(p1, p2, 2.0)


def points_distance_matrix(points: list[Point], mode: ObjectiveMode) -> DistanceMatrix:
    """Pairwise euclidean matrix over already-known representative points."""
    n = len(points)
    entries = np.zeros((n, n), dtype=float)
    for i in range(n):
        for j in range(i + 1, n):
            d = lp_distance(points[i], points[j], 2.0)
            entries[i, j] = entries[j, i] = d
    return DistanceMatrix(n, entries, mode)


def distance_matrix(region_map: RegionMap, mode: ObjectiveMode) -> DistanceMatrix:
    """Region-to-region distances; representatives computed once per region."""
    regions = sorted(region_map.regions, key=lambda reg: reg.id)
    reps = [representative_point(reg, mode).point for reg in regions]
    return points_distance_matrix(reps, mode)

"""Bundled 29-site benchmark instance on a 200 x 200 map.

For each site the plain centroid-based coordinates and the in-region
representative coordinates are both recorded (they differ for the five
concave sites), together with one demand value per site.  Demands sum to
200; the standard parameters are fixed cost 200, capacity 50, big-M 10000.
"""

from __future__ import annotations

from .grid import Point
from .metrics import points_distance_matrix
from .model import FacilityInstance, instance_from_matrix
from .representative import ObjectiveMode

# (geo_x, geo_y, alg_x, alg_y, demand), site index = row order
BENCHMARK_SITES: tuple[tuple[int, int, int, int, int], ...] = (
    (189, 25, 189, 25, 9),
    (186, 66, 186, 66, 10),
    (184, 112, 184, 112, 2),
    (186, 149, 186, 149, 10),
    (169, 162, 169, 162, 7),
    (148, 183, 148, 183, 1),
    (73, 183, 73, 183, 3),
    (121, 136, 121, 127, 6),
    (151, 98, 153, 106, 10),
    (163, 38, 163, 38, 10),
    (157, 15, 157, 15, 2),
    (108, 30, 107, 32, 10),
    (115, 23, 115, 23, 10),
    (133, 83, 133, 83, 5),
    (72, 27, 72, 27, 9),
    (75, 93, 64, 112, 2),
    (76, 93, 76, 93, 5),
    (19, 19, 19, 19, 10),
    (28, 46, 28, 46, 8),
    (7, 90, 7, 90, 10),
    (22, 106, 22, 106, 7),
    (42, 93, 37, 92, 1),
    (10, 132, 10, 132, 9),
    (11, 165, 11, 165, 10),
    (31, 138, 31, 138, 7),
    (30, 168, 30, 168, 8),
    (67, 163, 67, 163, 8),
    (67, 150, 67, 150, 4),
    (84, 154, 84, 154, 7),
)

FIXED_COST = 200.0
CAPACITY = 50.0
BIG_M = 10000.0


def benchmark_demands() -> list[int]:
    return [row[4] for row in BENCHMARK_SITES]


def benchmark_points(use_representative: bool = False) -> list[Point]:
    if use_representative:
        return [Point(float(r[2]), float(r[3])) for r in BENCHMARK_SITES]
    return [Point(float(r[0]), float(r[1])) for r in BENCHMARK_SITES]


def benchmark_instance(use_representative: bool = False) -> FacilityInstance:
    """The 29-site instance with c=200, L=50, M=10000."""
    points = benchmark_points(use_representative)
    dm = points_distance_matrix(points, ObjectiveMode.SQUARED)
    return instance_from_matrix(
        dm, benchmark_demands(), FIXED_COST, CAPACITY, BIG_M, tuple(points)
    )

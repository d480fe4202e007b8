import numpy as np
import pytest

from regionloc.grid import Point, RasterRegion, RegionMap
from regionloc.metrics import DistanceMatrix, points_distance_matrix
from regionloc.model import (
    FacilitySolution,
    build_instance,
    check_solution,
    instance_from_matrix,
)
from regionloc.representative import ObjectiveMode
from regionloc.solver import assign_feasible, solve


def two_region_map():
    return RegionMap(
        12,
        6,
        (
            RasterRegion(1, frozenset([(c, r) for c in range(2) for r in range(2)])),
            RasterRegion(2, frozenset([(c, r) for c in range(8, 10) for r in range(2)])),
        ),
    )


def instance_from_points(coords, demands, c=200.0, L=50.0, M=10000.0):
    pts = [Point(float(x), float(y)) for x, y in coords]
    dm = points_distance_matrix(pts, ObjectiveMode.SQUARED)
    return instance_from_matrix(dm, demands, c, L, M, tuple(pts))


def solution(n, open_sites, pairs, cost):
    assign = np.zeros((n, n), dtype=int)
    for x, y in pairs:
        assign[x, y] = 1
    return FacilitySolution(tuple(i in open_sites for i in range(n)), assign, cost, "OPTIMAL")


class TestBuildInstance:
    def test_valid_two_region_instance(self):
        inst = build_instance(two_region_map(), ObjectiveMode.SQUARED, [5, 5], 200, 50, 10000)
        assert inst.n == 2
        assert inst.total_demand == 10
        assert inst.issues() == []

    def test_unservable_demand(self):
        with pytest.raises(ValueError, match="unservable demand"):
            build_instance(two_region_map(), ObjectiveMode.SQUARED, [60, 5], 200, 50, 10000)

    def test_big_m_too_small(self):
        with pytest.raises(ValueError, match="big-M too small"):
            build_instance(two_region_map(), ObjectiveMode.SQUARED, [5, 5], 200, 50, 3.0)

    def test_demand_count_mismatch(self):
        with pytest.raises(ValueError, match="demands"):
            build_instance(two_region_map(), ObjectiveMode.SQUARED, [5], 200, 50, 10000)

    def test_benchmark_instance_validates(self):
        from regionloc.benchmark import benchmark_instance

        inst = benchmark_instance()
        assert inst.n == 29
        assert inst.total_demand == 200
        assert inst.issues() == []


class TestCheckSolution:
    def test_accepts_solver_output(self):
        inst = instance_from_points([(0, 0), (10, 0), (20, 0)], [5, 5, 5])
        sol = solve(inst).solution
        assert sol.status == "OPTIMAL"
        assert check_solution(inst, sol) == []

    def test_closed_facility_assignment(self):
        inst = instance_from_points([(0, 0), (10, 0)], [5, 5])
        sol = solution(2, {0}, [(0, 0), (1, 1)], 200.0)
        kinds = [v.constraint for v in check_solution(inst, sol)]
        assert "open_link" in kinds

    def test_capacity_violation(self):
        inst = instance_from_points([(0, 0), (10, 0)], [26, 25])
        sol = solution(2, {0}, [(0, 0), (1, 0)], 200.0)
        kinds = [v.constraint for v in check_solution(inst, sol)]
        assert "capacity" in kinds

    def test_closest_assignment_violation(self):
        # site 2 assigned 10 units away while an open facility sits 4 away
        inst = instance_from_points([(0, 0), (6, 0), (10, 0)], [5, 5, 5])
        sol = solution(3, {0, 1}, [(0, 0), (1, 1), (2, 0)], 400.0)
        kinds = [v.constraint for v in check_solution(inst, sol)]
        assert "closest" in kinds

    def test_missing_assignment(self):
        inst = instance_from_points([(0, 0), (10, 0)], [5, 5])
        sol = solution(2, {0}, [(0, 0)], 200.0)
        kinds = [v.constraint for v in check_solution(inst, sol)]
        assert "single" in kinds

    def test_wrong_cost(self):
        inst = instance_from_points([(0, 0), (1, 0)], [5, 5])
        sol = solution(2, {0}, [(0, 0), (1, 0)], 999.0)
        kinds = [v.constraint for v in check_solution(inst, sol)]
        assert "cost" in kinds

    def test_infeasible_solution_reports_nothing(self):
        from regionloc.model import infeasible_solution

        inst = instance_from_points([(0, 0)], [5])
        assert check_solution(inst, infeasible_solution(1)) == []

    def test_distance_scaling_preserves_feasibility(self):
        coords = [(0, 0), (7, 0), (13, 0), (20, 0)]
        inst = instance_from_points(coords, [10, 20, 30, 40], L=60.0)
        scaled_dm = DistanceMatrix(
            4, inst.distances.entries * 3.5, ObjectiveMode.SQUARED
        )
        scaled = instance_from_matrix(scaled_dm, list(inst.demand), 200.0, 60.0, 35000.0)
        for open_set in [(0,), (1,), (0, 3), (1, 2), (0, 1, 2, 3)]:
            a = assign_feasible(inst, open_set)
            b = assign_feasible(scaled, open_set)
            assert (a is None) == (b is None)
            if a is not None:
                assert np.array_equal(a.assign, b.assign)

"""Exact solvers for the capacitated closest-assignment location model.

Because every open facility costs the same, minimizing cost means
minimizing the number of open facilities.  ``solve`` searches open sets
of increasing size starting from the capacity lower bound
ceil(total demand / capacity); ``exhaustive_solve`` enumerates every
non-empty open set as an independent oracle.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .model import FacilityInstance, FacilitySolution, infeasible_solution

#: largest site count the exhaustive oracle will accept (2^n subsets)
ORACLE_CAP = 20


@dataclass(frozen=True)
class SolveReport:
    solution: FacilitySolution
    nodes_explored: int
    subproblems_checked: int
    wall_time: float


def assign_feasible(inst: FacilityInstance, open_set: tuple[int, ...]) -> FacilitySolution | None:
    """Closest-assignment + capacity feasibility for a fixed open set.

    Every demand site must go, whole, to one of its nearest open
    facilities (within the tie tolerance).  Sites with a unique nearest
    facility are forced; the remaining tie-sets are resolved by
    deterministic backtracking (largest demand first, facilities in index
    order), which is exact and cheap because exact distance ties are rare.
    """
    if not open_set:
        raise ValueError("open_set must be non-empty")
    open_set = tuple(sorted(open_set))
    n = inst.n
    d = inst.distances.entries
    eps = inst.tie_eps
    load = {y: 0.0 for y in open_set}
    choice: list[int | None] = [None] * n
    tied: list[tuple[int, tuple[int, ...]]] = []
    for x in range(n):
        dmin = min(d[x, y] for y in open_set)
        near = tuple(y for y in open_set if d[x, y] <= dmin + eps)
        if len(near) == 1:
            choice[x] = near[0]
            load[near[0]] += inst.demand[x]
        else:
            tied.append((x, near))
    if any(load[y] > inst.capacity for y in open_set):
        return None
    tied.sort(key=lambda item: (-inst.demand[item[0]], item[0]))

    def backtrack(i: int) -> bool:
        if i == len(tied):
            return True
        x, near = tied[i]
        for y in near:
            if load[y] + inst.demand[x] <= inst.capacity:
                load[y] += inst.demand[x]
                choice[x] = y
                if backtrack(i + 1):
                    return True
                load[y] -= inst.demand[x]
                choice[x] = None
        return False

    if not backtrack(0):
        return None
    assign = np.zeros((n, n), dtype=int)
    for x, y in enumerate(choice):
        assign[x, y] = 1
    opened = tuple(y in open_set for y in range(n))
    return FacilitySolution(opened, assign, len(open_set) * inst.fixed_cost, "OPTIMAL")


def solve(inst: FacilityInstance) -> SolveReport:
    """Minimal-open-count exact search.

    Open sets are tried by increasing size k (starting at the capacity
    lower bound) and, within each k, in lexicographic order, so the first
    feasible set found is the lexicographically smallest optimum.
    """
    start = time.perf_counter()
    n = inst.n
    if n == 0 or any(a > inst.capacity for a in inst.demand):
        return SolveReport(infeasible_solution(n), 0, 0, time.perf_counter() - start)
    k_min = max(1, math.ceil(inst.total_demand / inst.capacity))
    nodes = 0
    checked = 0
    for k in range(k_min, n + 1):
        for open_set in combinations(range(n), k):
            nodes += 1
            checked += 1
            sol = assign_feasible(inst, open_set)
            if sol is not None:
                return SolveReport(sol, nodes, checked, time.perf_counter() - start)
    return SolveReport(infeasible_solution(n), nodes, checked, time.perf_counter() - start)


def exhaustive_solve(inst: FacilityInstance, cap: int = ORACLE_CAP) -> SolveReport:
    """Oracle: test all 2^n - 1 open sets, keep the cheapest feasible one
    (ties broken to the lexicographically smallest site-index set)."""
    start = time.perf_counter()
    n = inst.n
    if n > cap:
        raise ValueError(f"oracle cap exceeded: {n} sites > {cap}")
    if n == 0:
        return SolveReport(infeasible_solution(0), 0, 0, time.perf_counter() - start)
    best_key: tuple[int, tuple[int, ...]] | None = None
    best_sol: FacilitySolution | None = None
    nodes = 0
    for mask in range(1, 1 << n):
        nodes += 1
        open_set = tuple(y for y in range(n) if mask >> y & 1)
        sol = assign_feasible(inst, open_set)
        if sol is None:
            continue
        key = (len(open_set), open_set)
        if best_key is None or key < best_key:
            best_key = key
            best_sol = sol
    if best_sol is None:
        return SolveReport(infeasible_solution(n), nodes, nodes, time.perf_counter() - start)
    return SolveReport(best_sol, nodes, nodes, time.perf_counter() - start)

"""Distance-sensitive capacitated facility-location model.

Each region contributes one candidate site at its representative point.
Opening a facility costs a flat amount; every demand site must be served
entirely by its nearest open facility (ties allowed either way), and no
facility may serve more total demand than its capacity.  The objective is
simply (number of open facilities) x fixed cost.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid import Point, RegionMap
from .metrics import DistanceMatrix, distance_matrix
from .representative import ObjectiveMode, representative_point

#: relative tolerance for "equidistant" open facilities
TIE_EPS_SCALE = 1e-9


@dataclass(frozen=True)
class FacilityInstance:
    """Sites, demands and distances for one solve."""

    n: int
    demand: tuple[int, ...]
    fixed_cost: float
    capacity: float
    big_m: float
    distances: DistanceMatrix
    sites: tuple[Point, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "demand", tuple(int(a) for a in self.demand))
        object.__setattr__(self, "sites", tuple(self.sites))
        if len(self.demand) != self.n:
            raise ValueError(f"expected {self.n} demands, got {len(self.demand)}")
        if self.distances.n != self.n:
            raise ValueError("distance matrix size does not match site count")

    @property
    def tie_eps(self) -> float:
        return TIE_EPS_SCALE * self.distances.max_distance

    @property
    def total_demand(self) -> int:
        return sum(self.demand)

    def issues(self) -> list[str]:
        """Soft validation per instance invariants (empty list == clean)."""
        out = []
        if any(a < 1 for a in self.demand):
            out.append("all demands must be >= 1")
        if self.demand and max(self.demand) > self.capacity:
            out.append("unservable demand")
        if self.big_m <= self.distances.max_distance:
            out.append("big-M too small")
        return out


@dataclass(frozen=True, eq=False)
class FacilitySolution:
    """Open-facility indicators plus a full assignment matrix."""

    open: tuple[bool, ...]
    assign: np.ndarray  # (n, n) ints; assign[x, y] == 1 iff x served by y
    total_cost: float
    status: str  # "OPTIMAL" | "INFEASIBLE"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FacilitySolution):
            return NotImplemented
        return (
            self.open == other.open
            and np.array_equal(self.assign, other.assign)
            and self.total_cost == other.total_cost
            and self.status == other.status
        )

    def __post_init__(self) -> None:
        object.__setattr__(self, "open", tuple(bool(v) for v in self.open))
        assign = np.asarray(self.assign, dtype=int)
        assign.setflags(write=False)
        object.__setattr__(self, "assign", assign)

    @property
    def open_sites(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.open) if v)

    def assigned_facility(self, x: int) -> int:
        ys = np.flatnonzero(self.assign[x])
        if len(ys) != 1:
            raise ValueError(f"site {x} has {len(ys)} assignments")
        return int(ys[0])


def infeasible_solution(n: int) -> FacilitySolution:
    return FacilitySolution((False,) * n, np.zeros((n, n), dtype=int), 0.0, "INFEASIBLE")


@dataclass(frozen=True)
class ConstraintViolation:
    """One violated model condition found by :func:`check_solution`."""

    constraint: str  # "open_link" (2), "closest" (3), "capacity" (4), "single" (5), "cost"
    message: str


def build_instance(
    region_map: RegionMap,
    mode: ObjectiveMode,
    demands: list[int],
    c: float,
    L: float,
    M: float,
) -> FacilityInstance:
    """Assemble and validate an instance from a region map."""
    if len(demands) != len(region_map.regions):
        raise ValueError(
            f"expected {len(region_map.regions)} demands, got {len(demands)}"
        )
    if c <= 0 or L <= 0 or M <= 0:
        raise ValueError("parameters c, L, M must be positive")
    dm = distance_matrix(region_map, mode)
    regions = sorted(region_map.regions, key=lambda reg: reg.id)
    sites = tuple(representative_point(reg, mode).point for reg in regions)
    return instance_from_matrix(dm, demands, c, L, M, sites)


def instance_from_matrix(
    dm: DistanceMatrix,
    demands: list[int],
    c: float,
    L: float,
    M: float,
    sites: tuple[Point, ...] = (),
) -> FacilityInstance:
    inst = FacilityInstance(dm.n, tuple(demands), c, L, M, dm, sites)
    for issue in inst.issues():
        raise ValueError(issue)
    return inst


def check_solution(inst: FacilityInstance, sol: FacilitySolution) -> list[ConstraintViolation]:
    """Verify every model condition; violations are data, not errors."""
    out: list[ConstraintViolation] = []
    if sol.status != "OPTIMAL":
        return out
    n = inst.n
    d = inst.distances.entries
    eps = inst.tie_eps
    expected_cost = sum(sol.open) * inst.fixed_cost
    if not np.isclose(sol.total_cost, expected_cost, rtol=1e-12, atol=1e-9):
        out.append(
            ConstraintViolation("cost", f"total cost {sol.total_cost} != open count x fixed cost {expected_cost}")
        )
    for x in range(n):
        ys = np.flatnonzero(sol.assign[x])
        if len(ys) != 1:
            out.append(ConstraintViolation("single", f"site {x} assigned to {len(ys)} facilities"))
            continue
        m = int(ys[0])
        if not sol.open[m]:
            out.append(ConstraintViolation("open_link", f"site {x} assigned to closed facility {m}"))
            continue
        for y in range(n):
            if sol.open[y] and d[x, m] > d[x, y] + eps:
                out.append(
                    ConstraintViolation(
                        "closest",
                        f"site {x} assigned to facility {m} at {d[x, m]:.6g} while open facility {y} is nearer at {d[x, y]:.6g}",
                    )
                )
                break
    for y in range(n):
        load = int(np.dot(inst.demand, sol.assign[:, y]))
        if load > inst.capacity:
            out.append(
                ConstraintViolation("capacity", f"facility {y} serves demand {load} > capacity {inst.capacity}")
            )
    return out

"""Scikit-learn-style wrappers around the functional core.

These make the region pipeline compose with the wider ecosystem:
``RepresentativePointTransformer`` and ``RegionDistanceTransformer`` are
stateless transformers, ``CapacitatedFacilityLocator`` is a fit/predict
estimator whose fitted attributes carry the optimal facility plan.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .grid import Point, RasterRegion, RegionMap
from .metrics import distance_matrix, points_distance_matrix
from .model import check_solution, instance_from_matrix
from .representative import ObjectiveMode, representative_point
from .solver import solve


def _as_regions(X) -> list[RasterRegion]:
    if isinstance(X, RegionMap):
        return sorted(X.regions, key=lambda reg: reg.id)
    regions = list(X)
    if not all(isinstance(reg, RasterRegion) for reg in regions):
        raise TypeError("X must be a RegionMap or an iterable of RasterRegion")
    return regions


def _as_mode(mode: str) -> ObjectiveMode:
    try:
        return ObjectiveMode(mode)
    except ValueError as exc:
        raise ValueError(f"mode must be 'euclidean' or 'squared', got {mode!r}") from exc


class RepresentativePointTransformer(TransformerMixin, BaseEstimator):
    """Map regions to their in-region representative points.

    ``transform`` accepts a ``RegionMap`` or an iterable of
    ``RasterRegion`` and returns an (n, 2) array of point coordinates.
    """

    def __init__(self, mode: str = "squared"):
        self.mode = mode

    def fit(self, X, y=None):
        _as_mode(self.mode)
        return self

    def transform(self, X) -> np.ndarray:
        mode = _as_mode(self.mode)
        regions = _as_regions(X)
        pts = [representative_point(reg, mode).point for reg in regions]
        return np.array([[p.x, p.y] for p in pts], dtype=float)


class RegionDistanceTransformer(TransformerMixin, BaseEstimator):
    """Map a ``RegionMap`` to its (n, n) region distance matrix."""

    def __init__(self, mode: str = "squared"):
        self.mode = mode

    def fit(self, X, y=None):
        _as_mode(self.mode)
        return self

    def transform(self, X) -> np.ndarray:
        mode = _as_mode(self.mode)
        if isinstance(X, RegionMap):
            return distance_matrix(X, mode).entries.copy()
        pts = [Point(float(x), float(y)) for x, y in np.asarray(X, dtype=float)]
        return points_distance_matrix(pts, mode).entries.copy()


class CapacitatedFacilityLocator(BaseEstimator):
    """Exact capacitated closest-assignment facility location.

    ``fit(X, y)`` takes a ``RegionMap`` or an (n, 2) site array as X and
    the per-site demands as y.  Fitted attributes: ``open_sites_`` (tuple
    of opened site indices), ``assignment_`` (site -> facility index
    array), ``cost_``, ``status_``.  ``predict`` returns the facility
    index serving each fitted site.
    """

    def __init__(self, fixed_cost: float = 200.0, capacity: float = 50.0,
                 big_m: float | None = None, mode: str = "squared"):
        self.fixed_cost = fixed_cost
        self.capacity = capacity
        self.big_m = big_m
        self.mode = mode

    def fit(self, X, y):
        mode = _as_mode(self.mode)
        demands = [int(a) for a in np.asarray(y).ravel()]
        if isinstance(X, RegionMap):
            dm = distance_matrix(X, mode)
        else:
            pts = [Point(float(x), float(yy)) for x, yy in np.asarray(X, dtype=float)]
            dm = points_distance_matrix(pts, mode)
        big_m = self.big_m if self.big_m is not None else 2.0 * dm.max_distance + 1.0
        inst = instance_from_matrix(dm, demands, self.fixed_cost, self.capacity, big_m)
        report = solve(inst)
        sol = report.solution
        self.status_ = sol.status
        self.report_ = report
        if sol.status == "OPTIMAL":
            violations = check_solution(inst, sol)
            assert not violations, violations
            self.open_sites_ = sol.open_sites
            self.assignment_ = np.array(
                [sol.assigned_facility(x) for x in range(inst.n)], dtype=int
            )
            self.cost_ = sol.total_cost
        else:
            self.open_sites_ = ()
            self.assignment_ = np.array([], dtype=int)
            self.cost_ = float("nan")
        return self

    def predict(self, X=None) -> np.ndarray:
        if not hasattr(self, "status_"):
            raise NotFittedError("call fit before predict")
        return self.assignment_.copy()

"""regionloc: in-region representative points for concave raster regions,
region distance matrices, and an exact capacitated closest-assignment
facility-location solver."""

from .grid import Point, RasterRegion, RegionMap, Violation, area, centroid, contains, validate
from .representative import (
    ObjectiveMode,
    RepPointResult,
    brute_force_representative_point,
    objective,
    representative_point,
)
from .metrics import DistanceMatrix, distance_matrix, lp_distance, region_distance
from .model import (
    ConstraintViolation,
    FacilityInstance,
    FacilitySolution,
    build_instance,
    check_solution,
)
from .solver import SolveReport, assign_feasible, exhaustive_solve, solve
from .mapgen import GenConfig, fixture, generate
from .estimators import (
    CapacitatedFacilityLocator,
    RegionDistanceTransformer,
    RepresentativePointTransformer,
)

__version__ = "0.1.0"

__all__ = [
    "Point",
    "RasterRegion",
    "RegionMap",
    "Violation",
    "area",
    "centroid",
    "contains",
    "validate",
    "ObjectiveMode",
    "RepPointResult",
    "objective",
    "representative_point",
    "brute_force_representative_point",
    "DistanceMatrix",
    "lp_distance",
    "region_distance",
    "distance_matrix",
    "FacilityInstance",
    "FacilitySolution",
    "ConstraintViolation",
    "build_instance",
    "check_solution",
    "SolveReport",
    "assign_feasible",
    "solve",
    "exhaustive_solve",
    "GenConfig",
    "generate",
    "fixture",
    "RepresentativePointTransformer",
    "RegionDistanceTransformer",
    "CapacitatedFacilityLocator",
]

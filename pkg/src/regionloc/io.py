"""File formats: labeled-grid CSV maps, polygon JSON maps, center tables,
distance-matrix CSV, and instance/solution JSON.

All emitters are byte-deterministic for identical inputs.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
from pathlib import Path

import numpy as np

from .grid import Cell, Point, RasterRegion, RegionMap, centroid, validate
from .metrics import DistanceMatrix, points_distance_matrix
from .model import FacilityInstance, FacilitySolution, instance_from_matrix
from .representative import ObjectiveMode, representative_point


class MapFormatError(ValueError):
    """Raised when a map/instance file cannot be parsed or validated."""


# ---------------------------------------------------------------------------
# labeled-grid CSV  (row 0 of the file is the TOP map row, y = height - 1)

def emit_grid_csv(region_map: RegionMap) -> str:
    w, h = region_map.width, region_map.height
    grid = [[0] * w for _ in range(h)]
    for reg in region_map.regions:
        for c, r in reg.sorted_cells:
            grid[r][c] = reg.id
    lines = []
    for r in range(h - 1, -1, -1):
        lines.append(",".join(str(v) for v in grid[r]))
    return "\n".join(lines) + "\n"


def parse_grid_csv(text: str) -> RegionMap:
    rows = [line.split(",") for line in text.strip().splitlines()]
    if not rows or not rows[0]:
        raise MapFormatError("empty map file")
    width = len(rows[0])
    height = len(rows)
    if any(len(row) != width for row in rows):
        raise MapFormatError("ragged rows in map file")
    cells_by_id: dict[int, set[Cell]] = {}
    for file_row, row in enumerate(rows):
        r = height - 1 - file_row
        for c, raw in enumerate(row):
            try:
                label = int(raw)
            except ValueError as exc:
                raise MapFormatError(f"non-integer label {raw!r} at row {file_row}, col {c}") from exc
            if label < 0:
                raise MapFormatError(f"negative label {label} at row {file_row}, col {c}")
            if label > 0:
                cells_by_id.setdefault(label, set()).add((c, r))
    regions = tuple(
        RasterRegion(rid, frozenset(cells)) for rid, cells in sorted(cells_by_id.items())
    )
    region_map = RegionMap(width, height, regions)
    violations = validate(region_map)
    if violations:
        raise MapFormatError("; ".join(v.message for v in violations))
    return region_map


# ---------------------------------------------------------------------------
# polygon JSON maps, rasterized by even-odd cell-center tests

def _point_in_rings_even_odd(x: float, y: float, rings: list[list[tuple[float, float]]]) -> bool:
    inside = False
    for ring in rings:
        m = len(ring)
        for i in range(m):
            x1, y1 = ring[i]
            x2, y2 = ring[(i + 1) % m]
            if (y1 > y) != (y2 > y):
                x_cross = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
                if x < x_cross:
                    inside = not inside
    return inside


def rasterize_polygons(width: int, height: int, rings: list[list[tuple[float, float]]]) -> frozenset[Cell]:
    cells = set()
    for c in range(width):
        for r in range(height):
            if _point_in_rings_even_odd(c + 0.5, r + 0.5, rings):
                cells.add((c, r))
    return frozenset(cells)


def parse_polygon_json(text: str) -> RegionMap:
    try:
        doc = json.loads(text)
        width = int(doc["width"])
        height = int(doc["height"])
        entries = doc["regions"]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise MapFormatError(f"bad polygon map document: {exc}") from exc
    regions = []
    for entry in entries:
        rings = [[(float(x), float(y)) for x, y in ring] for ring in entry["rings"]]
        cells = rasterize_polygons(width, height, rings)
        if not cells:
            raise MapFormatError(f"region {entry.get('id')} rasterizes to no cells")
        regions.append(RasterRegion(int(entry["id"]), cells))
    region_map = RegionMap(width, height, tuple(regions))
    violations = validate(region_map)
    if violations:
        raise MapFormatError("; ".join(v.message for v in violations))
    return region_map


def load_map(path: str | Path) -> RegionMap:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return parse_polygon_json(text)
    return parse_grid_csv(text)


# ---------------------------------------------------------------------------
# center table CSV

def _fmt(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else repr(float(v))


def center_table_csv(
    region_map: RegionMap,
    mode: ObjectiveMode,
    demands: list[int] | None = None,
    integer_centers: bool = False,
) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["region_id", "geo_x", "geo_y", "alg_x", "alg_y", "demand", "differs"])
    regions = sorted(region_map.regions, key=lambda reg: reg.id)
    for i, reg in enumerate(regions):
        geo = centroid(reg)
        alg = representative_point(reg, mode).point
        geo_cell = (math.floor(geo.x), math.floor(geo.y))
        alg_cell = (math.floor(alg.x), math.floor(alg.y))
        differs = geo_cell != alg_cell
        demand = demands[i] if demands is not None else 0
        if integer_centers:
            coords = [round(geo.x), round(geo.y), round(alg.x), round(alg.y)]
        else:
            coords = [_fmt(geo.x), _fmt(geo.y), _fmt(alg.x), _fmt(alg.y)]
        writer.writerow([reg.id, *coords, demand, str(differs).lower()])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# distance matrix CSV

def distance_matrix_csv(region_map: RegionMap, dm: DistanceMatrix) -> str:
    ids = [reg.id for reg in sorted(region_map.regions, key=lambda reg: reg.id)]
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["region_id", *ids])
    for i, rid in enumerate(ids):
        writer.writerow([rid, *[repr(float(v)) for v in dm.entries[i]]])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# instance / solution JSON

def instance_to_json(inst: FacilityInstance) -> str:
    doc = {
        "sites": [[p.x, p.y] for p in inst.sites],
        "demands": list(inst.demand),
        "c": inst.fixed_cost,
        "L": inst.capacity,
        "M": inst.big_m,
        "mode": inst.distances.mode.value,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def instance_from_json(text: str) -> FacilityInstance:
    try:
        doc = json.loads(text)
        sites = tuple(Point(float(x), float(y)) for x, y in doc["sites"])
        demands = [int(a) for a in doc["demands"]]
        c = float(doc["c"])
        L = float(doc["L"])
        M = float(doc["M"])
        mode = ObjectiveMode(doc.get("mode", "squared"))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise MapFormatError(f"bad instance document: {exc}") from exc
    dm = points_distance_matrix(list(sites), mode)
    try:
        return instance_from_matrix(dm, demands, c, L, M, sites)
    except ValueError as exc:
        raise MapFormatError(str(exc)) from exc


def solution_to_json(sol: FacilitySolution) -> str:
    pairs = [[int(x), int(y)] for x, y in np.argwhere(np.asarray(sol.assign) == 1)]
    doc = {
        "open": [int(i) for i in sol.open_sites],
        "assign": sorted(pairs),
        "cost": sol.total_cost,
        "status": sol.status,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def solution_from_json(text: str, n: int) -> FacilitySolution:
    try:
        doc = json.loads(text)
        open_sites = {int(i) for i in doc["open"]}
        pairs = [(int(x), int(y)) for x, y in doc["assign"]]
        cost = float(doc["cost"])
        status = str(doc["status"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise MapFormatError(f"bad solution document: {exc}") from exc
    assign = np.zeros((n, n), dtype=int)
    for x, y in pairs:
        assign[x, y] = 1
    return FacilitySolution(tuple(i in open_sites for i in range(n)), assign, cost, status)

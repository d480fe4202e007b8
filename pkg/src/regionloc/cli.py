"""Command-line surface.

Subcommands: genmap, centers, distmat, solve, render, fixture.
Exit codes: 0 success, 1 usage error, 2 input parse/validation error,
3 model infeasible.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .grid import RegionMap
from .io import (
    MapFormatError,
    center_table_csv,
    distance_matrix_csv,
    emit_grid_csv,
    instance_from_json,
    load_map,
    solution_from_json,
    solution_to_json,
)
from .mapgen import GenConfig, fixture, generate
from .metrics import distance_matrix
from .model import build_instance, check_solution
from .render import render_svg
from .representative import ObjectiveMode
from .solver import solve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exit code is 2; we use 1
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="regionloc", description="Region distances and facility location on raster maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode(p):
        p.add_argument("--mode", choices=["euclidean", "squared"], default="squared")

    p = sub.add_parser("genmap", help="generate a random map with concave regions")
    p.add_argument("--width", type=int, default=200)
    p.add_argument("--height", type=int, default=200)
    p.add_argument("--regions", type=int, default=10)
    p.add_argument("--bias", type=float, default=0.5, help="fraction of regions carved concave")
    p.add_argument("--demand-min", type=int, default=1)
    p.add_argument("--demand-max", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output map CSV path")
    p.add_argument("--demands-out", help="output demands JSON path")

    p = sub.add_parser("centers", help="write the per-region center comparison table")
    p.add_argument("map_file")
    add_mode(p)
    p.add_argument("--demands", help="demands JSON file")
    p.add_argument("--integer-centers", action="store_true")
    p.add_argument("--out", required=True)

    p = sub.add_parser("distmat", help="write the region distance matrix CSV")
    p.add_argument("map_file")
    add_mode(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("solve", help="solve the capacitated location model")
    p.add_argument("--map", dest="map_file", help="map file (CSV grid or polygon JSON)")
    p.add_argument("--demands", help="demands JSON file (with --map)")
    p.add_argument("--instance", help="instance JSON with explicit sites")
    add_mode(p)
    p.add_argument("--c", type=float, default=200.0, help="fixed cost per facility")
    p.add_argument("--L", type=float, default=50.0, help="facility capacity")
    p.add_argument("--M", type=float, default=10000.0, help="big-M distance dominator")
    p.add_argument("--out", required=True, help="solution JSON path")

    p = sub.add_parser("render", help="render a map (and overlays) to SVG")
    p.add_argument("map_file")
    add_mode(p)
    p.add_argument("--demands", help="demands JSON file")
    p.add_argument("--solution", help="solution JSON file")
    p.add_argument("--no-centers", action="store_true")
    p.add_argument("--out", required=True)

    p = sub.add_parser("fixture", help="write one of the built-in special-case maps")
    p.add_argument("case_id", type=int, choices=[1, 2, 3])
    p.add_argument("--out", required=True)
    return parser


def _load_demands(path: str, n: int) -> list[int]:
    try:
        demands = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MapFormatError(f"bad demands file: {exc}") from exc
    if not isinstance(demands, list) or len(demands) != n:
        raise MapFormatError(f"demands file must hold a JSON list of {n} integers")
    return [int(a) for a in demands]


def _load_map(path: str) -> RegionMap:
    try:
        return load_map(path)
    except OSError as exc:
        raise MapFormatError(str(exc)) from exc


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except MapFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "genmap":
        try:
            config = GenConfig(
                width=args.width,
                height=args.height,
                region_count=args.regions,
                concavity_bias=args.bias,
                demand_range=(args.demand_min, args.demand_max),
                seed=args.seed,
            )
            region_map, demands = generate(config)
        except (ValueError, RuntimeError) as exc:
            raise MapFormatError(str(exc)) from exc
        Path(args.out).write_text(emit_grid_csv(region_map))
        if args.demands_out:
            Path(args.demands_out).write_text(json.dumps(demands) + "\n")
        print(f"wrote {args.out}: {len(region_map.regions)} regions on {args.width}x{args.height}")
        return EXIT_OK

    if args.command == "centers":
        region_map = _load_map(args.map_file)
        demands = _load_demands(args.demands, len(region_map.regions)) if args.demands else None
        text = center_table_csv(
            region_map, ObjectiveMode(args.mode), demands, args.integer_centers
        )
        Path(args.out).write_text(text)
        print(f"wrote {args.out}: {len(region_map.regions)} rows")
        return EXIT_OK

    if args.command == "distmat":
        region_map = _load_map(args.map_file)
        dm = distance_matrix(region_map, ObjectiveMode(args.mode))
        Path(args.out).write_text(distance_matrix_csv(region_map, dm))
        print(f"wrote {args.out}: {dm.n}x{dm.n} matrix")
        return EXIT_OK

    if args.command == "solve":
        if bool(args.instance) == bool(args.map_file):
            raise MapFormatError("provide exactly one of --map or --instance")
        if args.instance:
            try:
                inst = instance_from_json(Path(args.instance).read_text())
            except OSError as exc:
                raise MapFormatError(str(exc)) from exc
        else:
            region_map = _load_map(args.map_file)
            if not args.demands:
                raise MapFormatError("--demands is required with --map")
            demands = _load_demands(args.demands, len(region_map.regions))
            try:
                inst = build_instance(
                    region_map, ObjectiveMode(args.mode), demands, args.c, args.L, args.M
                )
            except ValueError as exc:
                raise MapFormatError(str(exc)) from exc
        report = solve(inst)
        sol = report.solution
        Path(args.out).write_text(solution_to_json(sol))
        if sol.status != "OPTIMAL":
            print("status: INFEASIBLE", file=sys.stderr)
            return EXIT_INFEASIBLE
        assert not check_solution(inst, sol)
        print(f"status: OPTIMAL  open: {len(sol.open_sites)}  cost: {sol.total_cost:g}")
        print(f"open sites: {list(sol.open_sites)}")
        for x in range(inst.n):
            print(f"  site {x} (demand {inst.demand[x]}) -> facility {sol.assigned_facility(x)}")
        print(
            f"search: {report.nodes_explored} nodes, "
            f"{report.subproblems_checked} assignment checks, {report.wall_time:.3f}s"
        )
        return EXIT_OK

    if args.command == "render":
        region_map = _load_map(args.map_file)
        n = len(region_map.regions)
        demands = _load_demands(args.demands, n) if args.demands else None
        solution = None
        if args.solution:
            try:
                solution = solution_from_json(Path(args.solution).read_text(), n)
            except OSError as exc:
                raise MapFormatError(str(exc)) from exc
        try:
            text = render_svg(
                region_map,
                mode=ObjectiveMode(args.mode),
                demands=demands,
                solution=solution,
                show_centers=not args.no_centers,
            )
        except ValueError as exc:
            raise MapFormatError(str(exc)) from exc
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
        return EXIT_OK

    if args.command == "fixture":
        Path(args.out).write_text(emit_grid_csv(fixture(args.case_id)))
        print(f"wrote {args.out}: fixture case {args.case_id}")
        return EXIT_OK

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())

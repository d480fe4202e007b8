"""Deterministic SVG rendering of maps, centers, and facility assignments.

Map coordinates have y growing upward; SVG has y growing downward, so
every y is flipped against the map height.  Output is a plain string
built in a fixed order, byte-identical for identical inputs.
"""

from __future__ import annotations

import colorsys
import math

from .grid import Point, RegionMap, centroid
from .model import FacilitySolution
from .representative import ObjectiveMode, representative_point

_SCALE = 16  # SVG user units per map cell


def region_color(region_id: int) -> str:
    """Distinct, stable fill color per region id (golden-angle hue walk)."""
    hue = (region_id * 0.618033988749895) % 1.0
    r, g, b = colorsys.hls_to_rgb(hue, 0.72, 0.55)
    return f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"


def _num(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return s if s else "0"


class _Svg:
    def __init__(self, width: int, height: int):
        self.height = height
        self.parts: list[str] = [
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width * _SCALE} {height * _SCALE}" '
            f'width="{width * _SCALE}" height="{height * _SCALE}">',
            f'<rect x="0" y="0" width="{width * _SCALE}" height="{height * _SCALE}" fill="#ffffff"/>',
        ]

    def xy(self, p: Point) -> tuple[float, float]:
        return p.x * _SCALE, (self.height - p.y) * _SCALE

    def add(self, element: str) -> None:
        self.parts.append(element)

    def text(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def render_svg(
    region_map: RegionMap,
    mode: ObjectiveMode | None = None,
    demands: list[int] | None = None,
    solution: FacilitySolution | None = None,
    show_centers: bool = True,
) -> str:
    """Render region fills plus optional center glyphs, demand labels and
    assignment arrows.  Geo centers draw as circles, representative points
    as crosses, open facilities as squares."""
    svg = _Svg(region_map.width, region_map.height)
    regions = sorted(region_map.regions, key=lambda reg: reg.id)
    if demands is not None and len(demands) != len(regions):
        raise ValueError("demand count does not match region count")
    if solution is not None and len(solution.open) != len(regions):
        raise ValueError("solution size does not match region count")
    for reg in regions:
        fill = region_color(reg.id)
        for c, r in reg.sorted_cells:
            x, y = svg.xy(Point(c, r + 1))
            svg.add(f'<rect x="{_num(x)}" y="{_num(y)}" width="{_SCALE}" height="{_SCALE}" fill="{fill}"/>')
    reps: list[Point] = []
    if mode is not None:
        reps = [representative_point(reg, mode).point for reg in regions]
    if solution is not None and reps:
        for x_idx in range(len(regions)):
            y_idx = solution.assigned_facility(x_idx)
            if y_idx == x_idx:
                continue
            x1, y1 = svg.xy(reps[x_idx])
            x2, y2 = svg.xy(reps[y_idx])
            dx, dy = x2 - x1, y2 - y1
            norm = math.hypot(dx, dy) or 1.0
            hx, hy = dx / norm, dy / norm
            tip_x, tip_y = x2 - hx * 6, y2 - hy * 6
            svg.add(
                f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
                'stroke="#333333" stroke-width="1.5"/>'
            )
            left = (-hy, hx)
            svg.add(
                '<polygon points="'
                f'{_num(x2)},{_num(y2)} '
                f'{_num(tip_x + left[0] * 3)},{_num(tip_y + left[1] * 3)} '
                f'{_num(tip_x - left[0] * 3)},{_num(tip_y - left[1] * 3)}" fill="#333333"/>'
            )
    if show_centers:
        for reg in regions:
            gx, gy = svg.xy(centroid(reg))
            svg.add(
                f'<circle cx="{_num(gx)}" cy="{_num(gy)}" r="4" fill="none" stroke="#000000" stroke-width="1.5"/>'
            )
    for i, rep in enumerate(reps):
        ax, ay = svg.xy(rep)
        svg.add(
            f'<path d="M {_num(ax - 4)} {_num(ay - 4)} L {_num(ax + 4)} {_num(ay + 4)} '
            f'M {_num(ax - 4)} {_num(ay + 4)} L {_num(ax + 4)} {_num(ay - 4)}" '
            'stroke="#b00020" stroke-width="2" fill="none"/>'
        )
        if solution is not None and solution.open[i]:
            svg.add(
                f'<rect x="{_num(ax - 6)}" y="{_num(ay - 6)}" width="12" height="12" '
                'fill="none" stroke="#b00020" stroke-width="2"/>'
            )
    if demands is not None and reps:
        for i, rep in enumerate(reps):
            tx, ty = svg.xy(rep)
            svg.add(
                f'<text x="{_num(tx + 6)}" y="{_num(ty - 6)}" font-size="11" '
                f'font-family="sans-serif" fill="#000000">{demands[i]}</text>'
            )
    return svg.text()

from regionloc.grid import RasterRegion, RegionMap
from regionloc.mapgen import fixture
from regionloc.model import build_instance
from regionloc.render import region_color, render_svg
from regionloc.representative import ObjectiveMode
from regionloc.solver import solve

import pytest


class TestRegionColor:
    def test_stable(self):
        assert region_color(1) == region_color(1)

    def test_neighbors_distinct(self):
        colors = [region_color(i) for i in range(1, 30)]
        assert len(set(colors)) == len(colors)

    def test_format(self):
        assert region_color(7).startswith("#")
        assert len(region_color(7)) == 7


class TestRenderSvg:
    def test_byte_deterministic(self):
        m = fixture(2)
        a = render_svg(m, mode=ObjectiveMode.SQUARED)
        b = render_svg(m, mode=ObjectiveMode.SQUARED)
        assert a == b

    def test_well_formed_document(self):
        text = render_svg(fixture(1))
        assert text.startswith("<svg ")
        assert text.endswith("</svg>\n")

    def test_one_rect_per_cell(self):
        m = fixture(1)
        text = render_svg(m, show_centers=False)
        cell_count = sum(len(reg.cells) for reg in m.regions)
        # background rect plus one per cell
        assert text.count("<rect ") == cell_count + 1

    def test_case1_distinct_fills_and_glyphs(self):
        m = fixture(1)
        text = render_svg(m, mode=ObjectiveMode.SQUARED)
        assert region_color(1) in text and region_color(2) in text
        # region 1's circle (geo center) and cross (representative) sit at
        # different pixels: geo (12.5, 12.5) vs rep (10.5, 12.5)
        assert '<circle cx="200" cy="200"' in text
        assert "M 164 196 L 172 204" in text

    def test_y_axis_flip(self):
        # a single cell at the map origin must render at the bottom of the
        # image, not the top
        m = RegionMap(4, 4, (RasterRegion(1, frozenset([(0, 0)])),))
        text = render_svg(m, show_centers=False)
        assert '<rect x="0" y="48" width="16" height="16"' in text

    def test_solution_overlay_marks_open_facilities(self):
        m = fixture(2)
        inst = build_instance(m, ObjectiveMode.SQUARED, [10, 10, 10], 200.0, 50.0, 10000.0)
        sol = solve(inst).solution
        text = render_svg(m, mode=ObjectiveMode.SQUARED, solution=sol)
        squares = text.count('width="12" height="12"')
        assert squares == len(sol.open_sites)
        arrows = text.count("<polygon points=")
        assert arrows == sum(
            1 for x in range(inst.n) if sol.assigned_facility(x) != x
        )

    def test_demand_labels(self):
        m = fixture(1)
        text = render_svg(m, mode=ObjectiveMode.SQUARED, demands=[4, 9])
        assert ">4</text>" in text
        assert ">9</text>" in text

    def test_no_centers_flag(self):
        text = render_svg(fixture(1), show_centers=False)
        assert "<circle" not in text

    def test_demand_count_mismatch(self):
        with pytest.raises(ValueError, match="demand count"):
            render_svg(fixture(1), demands=[1, 2, 3])

    def test_solution_size_mismatch(self):
        m = fixture(2)
        inst = build_instance(m, ObjectiveMode.SQUARED, [10, 10, 10], 200.0, 50.0, 10000.0)
        sol = solve(inst).solution
        with pytest.raises(ValueError, match="solution size"):
            render_svg(fixture(1), mode=ObjectiveMode.SQUARED, solution=sol)

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regionloc.grid import Point, RasterRegion, RegionMap
from regionloc.metrics import (
    distance_matrix,
    lp_distance,
    points_distance_matrix,
    region_distance,
)
from regionloc.representative import ObjectiveMode

from conftest import points_strategy

MODES = [ObjectiveMode.EUCLIDEAN, ObjectiveMode.SQUARED]


class TestLpDistance:
    def test_345_triangle(self):
        assert lp_distance(Point(0, 0), Point(3, 4), 2) == 5.0

    def test_rectilinear(self):
        assert lp_distance(Point(0, 0), Point(3, 4), 1) == 7.0

    @given(p=points_strategy, exp=st.sampled_from([1.0, 1.5, 2.0, 3.0]))
    def test_identity(self, p, exp):
        q = Point(*p)
        assert lp_distance(q, q, exp) == 0.0

    def test_invalid_exponent(self):
        with pytest.raises(ValueError, match="invalid norm exponent"):
            lp_distance(Point(0, 0), Point(1, 1), 0.5)

    @given(a=points_strategy, b=points_strategy, c=points_strategy,
           exp=st.sampled_from([1.0, 1.5, 2.0, 3.0]))
    @settings(max_examples=400)
    def test_metric_axioms(self, a, b, c, exp):
        pa, pb, pc = Point(*a), Point(*b), Point(*c)
        dab = lp_distance(pa, pb, exp)
        dba = lp_distance(pb, pa, exp)
        assert dab >= 0
        assert dab == dba
        if a != b:
            assert dab > 0
        assert lp_distance(pa, pc, exp) <= dab + lp_distance(pb, pc, exp) + 1e-9

    @given(a=points_strategy, b=points_strategy)
    @settings(max_examples=300)
    def test_nonincreasing_in_p(self, a, b):
        pa, pb = Point(*a), Point(*b)
        vals = [lp_distance(pa, pb, exp) for exp in [1.0, 1.5, 2.0, 3.0]]
        for lo, hi in zip(vals[1:], vals[:-1]):
            assert lo <= hi + 1e-9 * max(1.0, hi)


def single_cell_region(rid, c, r):
    return RasterRegion(rid, frozenset([(c, r)]))


class TestRegionDistance:
    @pytest.mark.parametrize("mode", MODES)
    def test_identical_single_cells(self, mode):
        a = single_cell_region(1, 4, 4)
        b = single_cell_region(2, 4, 4)
        assert region_distance(a, b, mode) == 0.0

    @pytest.mark.parametrize("mode", MODES)
    def test_345_cells(self, mode):
        a = single_cell_region(1, 0, 0)
        b = single_cell_region(2, 3, 4)
        assert region_distance(a, b, mode) == 5.0

    @pytest.mark.parametrize("mode", MODES)
    def test_self_distance_zero(self, mode, rng):
        from conftest import random_blob

        for _ in range(10):
            reg = random_blob(rng)
            assert region_distance(reg, reg, mode) == 0.0


class TestDistanceMatrix:
    def test_single_region(self):
        m = RegionMap(5, 5, (single_cell_region(1, 2, 2),))
        dm = distance_matrix(m, ObjectiveMode.SQUARED)
        assert dm.n == 1
        assert dm.entries[0, 0] == 0.0

    def test_two_single_cells(self):
        m = RegionMap(5, 5, (single_cell_region(1, 0, 0), single_cell_region(2, 0, 3)))
        dm = distance_matrix(m, ObjectiveMode.SQUARED)
        assert dm.entries[0, 1] == 3.0
        assert dm.entries[1, 0] == 3.0

    def test_symmetric_zero_diagonal(self, rng):
        from conftest import random_blob

        # disjoint blobs via horizontal offsets
        regs = []
        for i in range(4):
            blob = random_blob(rng, width=6, height=6)
            regs.append(RasterRegion(i + 1, frozenset((c + 7 * i, r) for c, r in blob.cells)))
        m = RegionMap(30, 6, tuple(regs))
        dm = distance_matrix(m, ObjectiveMode.EUCLIDEAN)
        assert np.array_equal(dm.entries, dm.entries.T)
        assert np.all(np.diag(dm.entries) == 0.0)
        assert np.all(dm.entries >= 0.0)
        assert np.all(np.isfinite(dm.entries))

    def test_relabeling_permutes_matrix(self, rng):
        from conftest import random_blob

        blobs = []
        for i in range(3):
            blob = random_blob(rng, width=6, height=6)
            blobs.append(frozenset((c + 7 * i, r) for c, r in blob.cells))
        m1 = RegionMap(30, 6, tuple(RasterRegion(i + 1, b) for i, b in enumerate(blobs)))
        perm = [2, 0, 1]  # region k of m2 is region perm[k] of m1
        m2 = RegionMap(30, 6, tuple(RasterRegion(i + 1, blobs[perm[i]]) for i in range(3)))
        d1 = distance_matrix(m1, ObjectiveMode.SQUARED).entries
        d2 = distance_matrix(m2, ObjectiveMode.SQUARED).entries
        for i in range(3):
            for j in range(3):
                assert d2[i, j] == d1[perm[i], perm[j]]

    def test_benchmark_entry(self):
        # first two bundled benchmark sites: (189, 25) and (186, 66)
        pts = [Point(189, 25), Point(186, 66)]
        dm = points_distance_matrix(pts, ObjectiveMode.SQUARED)
        assert dm.entries[0, 1] == pytest.approx(math.sqrt(3**2 + 41**2), abs=1e-12)
        assert dm.entries[0, 1] == pytest.approx(41.1096, abs=5e-5)

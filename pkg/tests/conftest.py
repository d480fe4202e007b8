from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from regionloc.grid import RasterRegion

cells_strategy = st.frozensets(
    st.tuples(st.integers(0, 9), st.integers(0, 9)), min_size=1, max_size=40
)

regions_strategy = cells_strategy.map(lambda cells: RasterRegion(1, cells))

# quantized so that distinct coordinates stay distinct after powering
# (raw subnormals underflow to 0 under |.|^p and break metric axioms)
coord_strategy = st.floats(-100, 100, allow_nan=False).map(lambda v: round(v, 6))
points_strategy = st.tuples(coord_strategy, coord_strategy)


def random_blob(rng: random.Random, width: int = 12, height: int = 12, max_cells: int = 30) -> RasterRegion:
    """A random 8-connected blob grown cell by cell."""
    cells = {(rng.randrange(width), rng.randrange(height))}
    target = rng.randint(1, max_cells)
    while len(cells) < target:
        c, r = rng.choice(sorted(cells))
        nxt = (c + rng.choice([-1, 0, 1]), r + rng.choice([-1, 0, 1]))
        if 0 <= nxt[0] < width and 0 <= nxt[1] < height:
            cells.add(nxt)
    return RasterRegion(1, frozenset(cells))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1234)

"""Instance builders shared by the test modules."""

import random

import numpy as np
from hypothesis import strategies as st

from core.dp_core import CurvePairCost, MatrixCost
from core.geometry import Curve

# small integers make ties between costs common
cost_values = st.one_of(
    st.integers(min_value=0, max_value=9).map(float),
    st.floats(min_value=0, max_value=100, allow_nan=False, allow_infinity=False),
)


@st.composite
def cost_matrices(draw, max_rows=6, max_cols=6):
    n = draw(st.integers(min_value=1, max_value=max_rows))
    m = draw(st.integers(min_value=1, max_value=max_cols))
    rows = draw(st.lists(st.lists(cost_values, min_size=m, max_size=m), min_size=n, max_size=n))
    return MatrixCost(rows)


coordinates = st.one_of(
    st.integers(min_value=-20, max_value=20).map(float),
    st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False),
)


@st.composite
def curves(draw, dim=None, min_size=0, max_size=8):
    d = dim if dim is not None else draw(st.integers(min_value=1, max_value=3))
    rows = draw(
        st.lists(st.lists(coordinates, min_size=d, max_size=d), min_size=min_size, max_size=max_size)
    )
    return Curve.from_coords(rows)


@st.composite
def curve_pairs(draw, max_size=6):
    d = draw(st.integers(min_value=1, max_value=3))
    p = draw(curves(dim=d, min_size=1, max_size=max_size))
    q = draw(curves(dim=d, min_size=1, max_size=max_size))
    return CurvePairCost(p, q)


def random_curve(rng: random.Random, n: int, dim: int) -> Curve:
    """Mixed integer and real coordinates in a small box."""
    if rng.random() < 0.5:
        rows = [[float(rng.randint(0, 6)) for _ in range(dim)] for _ in range(n)]
    else:
        rows = [[rng.uniform(-10, 10) for _ in range(dim)] for _ in range(n)]
    return Curve.from_coords(rows)


def random_instance(rng: random.Random, max_n: int, max_m: int) -> CurvePairCost:
    dim = rng.randint(1, 3)
    return CurvePairCost(
        random_curve(rng, rng.randint(1, max_n), dim),
        random_curve(rng, rng.randint(1, max_m), dim),
    )


def random_matrix(rng: random.Random, n: int, m: int) -> MatrixCost:
    return MatrixCost(np.array([[float(rng.randint(0, 20)) for _ in range(m)] for _ in range(n)]))

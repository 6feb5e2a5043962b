import math
import random

import numpy as np
import pytest

from core.banded import BandParams, CutoffMode, banded_pass
from core.dp_core import CurvePairCost, MatrixCost, classical_full, parse_matrix
from core.errors import EmptyInputError, MalformedInputError, SizeLimitError
from core.generators import GenConfig, perturbed_curve, random_long_edged_curve
from core.geometry import Curve
from core.matrices import (
    CellState,
    banded_matrix_dump,
    cost_grid,
    euclidean_matrix,
    format_cell,
    frechet_matrix,
    matrix_header,
    render_matrix,
)
from tests.strategies import random_instance, random_matrix


class TestGoldens:
    def test_frechet_sample(self, sample, golden):
        assert render_matrix(frechet_matrix(sample)) == golden("sample_frechet.tsv")

    def test_banded_sample(self, sample, golden):
        dump = banded_matrix_dump(sample, BandParams(3, 20.0))
        assert render_matrix(dump) == golden("sample_banded_w3_t20.tsv")

    def test_euclid_sample_reads_back(self, sample):
        rendered = render_matrix(cost_grid(sample))
        assert rendered.splitlines()[1].split("\t")[4] == "99.50"
        assert np.array_equal(parse_matrix(rendered).values, sample.values)


def test_cells_unreachable_within_band_are_cut(sample):
    dump = banded_matrix_dump(sample, BandParams(3, 20.0))
    # both costs are under the threshold but every in-band predecessor is cut
    assert sample.cost(2, 4) < 20 and sample.cost(4, 2) < 20
    assert dump.state(2, 4) is CellState.CUT
    assert dump.state(4, 2) is CellState.CUT
    assert dump.state(0, 3) is CellState.OUT_OF_BAND
    assert dump.state(5, 5) is CellState.VALUE
    assert dump.count(CellState.VALUE) == 6
    assert dump.count(CellState.CUT) == 18
    assert dump.count(CellState.OUT_OF_BAND) == 12


def test_width_one_dump_is_the_diagonal(sample):
    dump = banded_matrix_dump(sample, BandParams(1))
    for i in range(6):
        for j in range(6):
            expected = CellState.VALUE if i == j else CellState.OUT_OF_BAND
            assert dump.state(i, j) is expected


def test_full_band_without_threshold_is_the_frechet_matrix():
    rng = random.Random(21)
    for _ in range(50):
        source = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        dump = banded_matrix_dump(source, BandParams(max(source.shape)))
        assert np.array_equal(dump.values, frechet_matrix(source).values)


def test_dump_agrees_with_pass():
    rng = random.Random(22)
    for _ in range(200):
        source = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        params = BandParams(rng.randint(1, 7), rng.choice([math.inf, rng.uniform(0, 20)]))
        dump = banded_matrix_dump(source, params)
        outcome = banded_pass(source, params)
        corner = dump.values[-1, -1]
        assert outcome.value == (math.inf if np.isnan(corner) else corner)
        assert outcome.cells_computed == dump.values.size - dump.count(CellState.OUT_OF_BAND)


def test_inclusive_dump_keeps_ties(sample):
    strict = banded_matrix_dump(sample, BandParams(2, 13.45))
    inclusive = banded_matrix_dump(sample, BandParams(2, 13.45, CutoffMode.INCLUSIVE))
    assert strict.state(1, 1) is CellState.CUT
    assert inclusive.values[1, 1] == 13.45
    assert inclusive.values[5, 5] == 13.45


class TestRendering:
    def test_single_value(self):
        assert render_matrix(np.array([[5.0]])) == "5.00\n"

    def test_half_even(self):
        assert format_cell(0.125) == "0.12"
        assert format_cell(0.375) == "0.38"
        assert format_cell(2.675) == "2.68"
        assert format_cell(6.0) == "6.00"

    def test_special_values(self):
        assert format_cell(math.inf) == "inf"
        assert format_cell(math.nan) == "-"

    def test_large_value_stays_positional(self):
        assert format_cell(1e20) == "100000000000000000000.00"

    def test_header(self, sample):
        assert matrix_header(frechet_matrix(sample)) == "# n=6 m=6"
        assert matrix_header(banded_matrix_dump(sample, BandParams(3, 20.0))) == "# n=6 m=6 w=3 t=20"
        rendered = render_matrix(np.zeros((2, 3)), header=True)
        assert rendered == "# n=2 m=3\n0.00\t0.00\t0.00\n0.00\t0.00\t0.00\n"

    def test_banded_dump_reads_back_with_dash_as_inf(self, sample, golden):
        text = golden("sample_banded_w3_t20.tsv")
        with pytest.raises(MalformedInputError):
            parse_matrix(text)
        grid = parse_matrix(text, dash_as_inf=True)
        assert grid.values[0, 5] == math.inf
        assert grid.values[5, 5] == 13.45


def test_euclidean_matrix_of_curves():
    p = Curve.from_coords([(0, 0), (3, 4)])
    q = Curve.from_coords([(0, 0), (6, 8), (0, 1)])
    grid = euclidean_matrix(p, q)
    assert grid[0].tolist() == [0.0, 10.0, 1.0]
    assert grid[1].tolist() == [5.0, 5.0, pytest.approx(math.sqrt(18))]
    assert render_matrix(grid) == "0.00\t10.00\t1.00\n5.00\t5.00\t4.24\n"
    assert np.allclose(grid, cost_grid(CurvePairCost(p, q)), rtol=1e-12, atol=0)


def test_euclidean_matrix_matches_point_costs_on_random_curves():
    rng = random.Random(31)
    for _ in range(30):
        source = random_instance(rng, 9, 9)
        grid = euclidean_matrix(source.p, source.q)
        assert grid.shape == source.shape
        assert np.allclose(grid, cost_grid(source), rtol=1e-12, atol=1e-12)


def test_euclidean_matrix_rejects_mixed_dimensions():
    with pytest.raises(MalformedInputError):
        euclidean_matrix(Curve.from_coords([(0, 0)]), Curve.from_coords([(0, 0, 0)]))


def test_long_edged_off_diagonal_exceeds_diagonal():
    cfg = GenConfig(n=30, edge_length=100.0, perturb=10, seed=8)
    rng = cfg.stream()
    p = random_long_edged_curve(cfg, rng)
    grid = euclidean_matrix(p, perturbed_curve(p, cfg.perturb, rng))
    largest_diagonal = max(grid[i, i] for i in range(30))
    for i in range(29):
        assert grid[i, i + 1] > largest_diagonal
        assert grid[i + 1, i] > largest_diagonal


def test_cell_cap(sample):
    with pytest.raises(SizeLimitError):
        frechet_matrix(sample, max_cells=35)
    with pytest.raises(SizeLimitError):
        banded_matrix_dump(sample, BandParams(2), max_cells=35)
    assert frechet_matrix(sample, max_cells=36).n == 6


def test_empty_inputs_rejected():
    with pytest.raises(EmptyInputError):
        euclidean_matrix(Curve(), Curve.from_coords([(1, 1)]))
    with pytest.raises(EmptyInputError):
        frechet_matrix(MatrixCost(np.zeros((0, 0))))

"""Full-grid dumps: Euclidean matrix, Fréchet matrix and the annotated banded matrix.

These materialize n×m grids and exist for inspection and golden tests; the
engines themselves never build them.
"""

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from enum import Enum
from typing import Union

import numpy as np
from scipy.spatial.distance import cdist

from core.banded import BandParams, banded_pass
from core.dp_core import CostSource, DPMatrix, classical_full, require_nonempty
from core.errors import EmptyInputError, MalformedInputError, SizeLimitError
from core.geometry import Curve, format_real

DEFAULT_CELL_CAP = 10_000_000

_CENTS = Decimal("0.01")
# wide enough for any finite float at two decimals
_WIDE = Context(prec=400)


class CellState(str, Enum):
    VALUE = "value"
    CUT = "cut"
    OUT_OF_BAND = "out-of-band"


@dataclass(frozen=True)
class AnnotatedMatrix:
    """Banded DP grid; NaN marks cells outside the band, +inf marks cut cells."""

    values: np.ndarray
    params: BandParams

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def m(self) -> int:
        return self.values.shape[1]

    def state(self, i: int, j: int) -> CellState:
        v = self.values[i, j]
        if np.isnan(v):
            return CellState.OUT_OF_BAND
        if np.isinf(v):
            return CellState.CUT
        return CellState.VALUE

    def count(self, state: CellState) -> int:
        if state is CellState.OUT_OF_BAND:
            return int(np.isnan(self.values).sum())
        if state is CellState.CUT:
            return int(np.isinf(self.values).sum())
        return int(np.isfinite(self.values).sum())


Grid = Union[AnnotatedMatrix, DPMatrix, np.ndarray]


def _check_cap(n: int, m: int, max_cells: int) -> None:
    if n * m > max_cells:
        raise SizeLimitError(f"a {n}x{m} dump exceeds the cap of {max_cells} cells")


def euclidean_matrix(p: Curve, q: Curve, *, max_cells: int = DEFAULT_CELL_CAP) -> np.ndarray:
    """Pairwise point distances, rows indexed by ``p`` and columns by ``q``."""
    if len(p) == 0 or len(q) == 0:
        raise EmptyInputError("euclidean matrix needs two non-empty curves")
    if p.dim != q.dim:
        raise MalformedInputError(f"curves have dimensions {p.dim} and {q.dim}")
    _check_cap(len(p), len(q), max_cells)
    return cdist(np.asarray(p.coords(), dtype=float), np.asarray(q.coords(), dtype=float))


def cost_grid(source: CostSource, *, max_cells: int = DEFAULT_CELL_CAP) -> np.ndarray:
    """The n×m cost grid of any source, explicit matrices included."""
    require_nonempty(source)
    _check_cap(source.rows, source.cols, max_cells)
    grid = np.empty(source.shape)
    for i in range(source.rows):
        for j in range(source.cols):
            grid[i, j] = source.cost(i, j)
    return grid


def frechet_matrix(source: CostSource, *, max_cells: int = DEFAULT_CELL_CAP) -> DPMatrix:
    """Full Fréchet table; entry (i, j) is the distance between the prefixes ending at i and j."""
    require_nonempty(source)
    _check_cap(source.rows, source.cols, max_cells)
    return classical_full(source)[1]


def banded_matrix_dump(
    source: CostSource, params: BandParams, *, max_cells: int = DEFAULT_CELL_CAP
) -> AnnotatedMatrix:
    """Run one banded pass and keep every written cell.

    Cells the pass never visits stay NaN and render as `-`.
    """
    require_nonempty(source)
    _check_cap(source.rows, source.cols, max_cells)
    grid = np.full(source.shape, np.nan)

    def record(i: int, j: int, value: float) -> None:
        grid[i, j] = value

    banded_pass(source, params, on_cell=record)
    return AnnotatedMatrix(values=grid, params=params)


def format_cell(value: float) -> str:
    if math.isnan(value):
        return "-"
    if math.isinf(value):
        return "inf"
    return str(Decimal(repr(float(value))).quantize(_CENTS, rounding=ROUND_HALF_EVEN, context=_WIDE))


def matrix_header(grid: Grid) -> str:
    values = grid.values if isinstance(grid, (AnnotatedMatrix, DPMatrix)) else np.asarray(grid)
    header = f"# n={values.shape[0]} m={values.shape[1]}"
    if isinstance(grid, AnnotatedMatrix):
        header += f" w={grid.params.width} t={format_real(grid.params.threshold)}"
    return header


def render_matrix(grid: Grid, *, header: bool = False) -> str:
    """Tab-separated rows, two decimals; `inf` for cut cells and `-` outside the band."""
    values = grid.values if isinstance(grid, (AnnotatedMatrix, DPMatrix)) else np.asarray(grid, dtype=float)
    lines = [matrix_header(grid)] if header else []
    for row in values.tolist():
        lines.append("\t".join(format_cell(v) for v in row))
    return "".join(line + "\n" for line in lines)


"""Cost sources and the reference computations of the discrete Fréchet distance.

Every engine in this package reads costs through a :class:`CostSource`; the
recurrence only ever takes maxima and minima of those costs, so engines that
visit the same cells return bit-identical values.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import EmptyInputError, MalformedInputError, SizeLimitError
from core.geometry import Curve, data_lines, parse_decimal, split_fields

BRUTE_FORCE_MAX_SIZE = 24

# Diagonal first: the brute-force search finds a tight bound sooner.
_STEPS = ((1, 1), (1, 0), (0, 1))


class CostSource(ABC):
    """An n×m grid of non-negative costs, queried lazily."""

    rows: int
    cols: int

    @abstractmethod
    def cost(self, i: int, j: int) -> float:
        ...

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_empty(self) -> bool:
        return self.rows == 0 or self.cols == 0

    def transposed(self) -> "CostSource":
        return TransposedCost(self)


class CurvePairCost(CostSource):
    """Euclidean distances between the points of two curves, recomputed per query."""

    def __init__(self, p: Curve, q: Curve):
        if p.dim is not None and q.dim is not None and p.dim != q.dim:
            raise MalformedInputError(f"curves have dimensions {p.dim} and {q.dim}")
        self.p = p
        self.q = q
        self.rows = len(p)
        self.cols = len(q)
        self._p = p.coords()
        self._q = q.coords()

    def cost(self, i: int, j: int) -> float:
        return math.dist(self._p[i], self._q[j])

    def transposed(self) -> "CostSource":
        return CurvePairCost(self.q, self.p)


class MatrixCost(CostSource):
    """An explicit cost grid; +inf entries are allowed."""

    def __init__(self, values):
        grid = np.asarray(values, dtype=float)
        if grid.size == 0:
            grid = grid.reshape(0, 0)
        if grid.ndim != 2:
            raise MalformedInputError(f"cost matrix must be 2-dimensional, got {grid.ndim}")
        if np.isnan(grid).any():
            raise MalformedInputError("cost matrix contains NaN")
        if (grid < 0).any():
            raise MalformedInputError("cost matrix contains negative entries")
        self.values = grid
        self.rows, self.cols = grid.shape
        self._cells = grid.tolist()

    def cost(self, i: int, j: int) -> float:
        return self._cells[i][j]

    def transposed(self) -> "CostSource":
        return MatrixCost(self.values.T)


class TransposedCost(CostSource):
    def __init__(self, inner: CostSource):
        self.inner = inner
        self.rows = inner.cols
        self.cols = inner.rows

    def cost(self, i: int, j: int) -> float:
        return self.inner.cost(j, i)

    def transposed(self) -> CostSource:
        return self.inner


@dataclass(frozen=True)
class DPMatrix:
    values: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def m(self) -> int:
        return self.values.shape[1]

    def __getitem__(self, index: Tuple[int, int]) -> float:
        return float(self.values[index])


def require_nonempty(source: CostSource) -> None:
    if source.is_empty:
        raise EmptyInputError(f"empty cost grid ({source.rows}x{source.cols})")


def _sweep_rows(source: CostSource) -> Iterator[List[float]]:
    """Yield the rows of the Fréchet table one at a time."""
    n, m = source.shape
    cost = source.cost
    prev: List[float] = []
    for i in range(n):
        row = [0.0] * m
        for j in range(m):
            d = cost(i, j)
            if i == 0:
                row[j] = d if j == 0 else max(d, row[j - 1])
            elif j == 0:
                row[j] = max(d, prev[0])
            else:
                row[j] = max(d, min(prev[j], prev[j - 1], row[j - 1]))
        yield row
        prev = row


def classical_full(source: CostSource) -> Tuple[float, DPMatrix]:
    """Distance and the whole n×m table, row by row in O(nm) time and memory."""
    require_nonempty(source)
    table = DPMatrix(np.array(list(_sweep_rows(source)), dtype=float))
    return float(table.values[-1, -1]), table


def classical_rolling(source: CostSource) -> float:
    """Same value as :func:`classical_full`, holding a single row at a time."""
    require_nonempty(source)
    last: List[float] = []
    for last in _sweep_rows(source):
        pass
    return last[-1]


def brute_force(source: CostSource, *, max_size: int = BRUTE_FORCE_MAX_SIZE) -> float:
    """Minimum width over all monotone traversals, by exhaustive search.

    Branches whose running width already reaches the best complete traversal
    are abandoned; the search stays exact.
    """
    require_nonempty(source)
    n, m = source.shape
    if n + m > max_size:
        raise SizeLimitError(f"brute force refuses n+m={n + m} (limit {max_size})")
    cost = source.cost
    best = math.inf

    def walk(i: int, j: int, width: float) -> None:
        nonlocal best
        width = max(width, cost(i, j))
        if width >= best:
            return
        if i == n - 1 and j == m - 1:
            best = width
            return
        for di, dj in _STEPS:
            if i + di < n and j + dj < m:
                walk(i + di, j + dj, width)

    walk(0, 0, -math.inf)
    return best


def parse_matrix(text: str, *, dash_as_inf: bool = False, source: Optional[str] = None) -> MatrixCost:
    """Read an explicit cost matrix: one row per line, `inf` allowed, `#` comments skipped."""
    rows: List[Sequence[float]] = []
    width = None
    for number, content in data_lines(text):
        fields = split_fields(content)
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise MalformedInputError(
                f"expected {width} entries, found {len(fields)}", line=number, source=source
            )
        rows.append([_parse_entry(f, number, dash_as_inf, source) for f in fields])
    return MatrixCost(rows)


def _parse_entry(token: str, line: int, dash_as_inf: bool, source: Optional[str]) -> float:
    if token == "inf" or (dash_as_inf and token == "-"):
        return math.inf
    value = parse_decimal(token, line=line, source=source)
    if value < 0:
        raise MalformedInputError(f"negative cost {token!r}", line=line, source=source)
    return value

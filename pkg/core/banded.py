"""One banded, thresholded pass of the Fréchet dynamic program.

Only cells with |i - j| < w are computed. A cell whose own cost fails the
cutoff is +inf, and so is every cell outside the band when read as a
predecessor. The sweep follows an L-shaped frontier: square step ``s`` first
fills column ``s`` above the diagonal, then row ``s`` below it, then the
diagonal cell; rows past the square are swept afterwards. Four arrays of
length ``m`` hold the previous and current column/row, so memory is O(n+m).
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from core.dp_core import CostSource, require_nonempty
from core.errors import ParameterError

INF = math.inf

CellObserver = Callable[[int, int, float], None]


class CutoffMode(str, Enum):
    STRICT = "strict"
    INCLUSIVE = "inclusive"

    def admits(self, cost: float, threshold: float) -> bool:
        if self is CutoffMode.STRICT:
            return cost < threshold
        return cost <= threshold


@dataclass(frozen=True)
class BandParams:
    width: int
    threshold: float = INF
    cutoff: CutoffMode = CutoffMode.STRICT

    def __post_init__(self):
        if isinstance(self.width, bool) or not isinstance(self.width, int) or self.width < 1:
            raise ParameterError(f"band width must be a positive integer, got {self.width!r}")
        if math.isnan(self.threshold) or self.threshold < 0:
            raise ParameterError(f"threshold must be >= 0, got {self.threshold!r}")
        object.__setattr__(self, "cutoff", CutoffMode(self.cutoff))


@dataclass(frozen=True)
class BandedOutcome:
    value: float
    breached: bool
    cells_computed: int
    distance_evals: int


def band_cell_count(n: int, m: int, width: int) -> int:
    """Number of cells of an n×m grid with |i - j| < width."""
    total = 0
    for i in range(n):
        lo = max(0, i - width + 1)
        hi = min(m - 1, i + width - 1)
        if hi >= lo:
            total += hi - lo + 1
    return total


def banded_pass(
    source: CostSource, params: BandParams, *, on_cell: Optional[CellObserver] = None
) -> BandedOutcome:
    """Run the band-restricted, thresholded recurrence once.

    ``breached`` is set when a cell with a finite value sits on the band edge
    and has a forward neighbour inside the grid but outside the band, i.e.
    when a cheaper traversal could have left the band. ``on_cell`` receives
    every written cell as ``(i, j, value)`` in the caller's orientation.
    """
    require_nonempty(source)
    if source.rows < source.cols:
        source = source.transposed()
        if on_cell is not None:
            report = on_cell

            def on_cell(i: int, j: int, value: float) -> None:
                report(j, i, value)

    n, m = source.shape
    w = params.width
    threshold = params.threshold
    admits = params.cutoff.admits
    cost = source.cost

    cells = 0
    evals = 0
    breached = False
    final = INF

    def settle(i: int, j: int, pred: float) -> float:
        nonlocal cells, evals, breached, final
        cells += 1
        value = INF
        if pred < INF:
            evals += 1
            d = cost(i, j)
            if admits(d, threshold):
                value = max(d, pred)
                if value < INF and (
                    (i - j == w - 1 and i + 1 < n) or (j - i == w - 1 and j + 1 < m)
                ):
                    breached = True
        if on_cell is not None:
            on_cell(i, j, value)
        if i == n - 1 and j == m - 1:
            final = value
        return value

    upper_old = [INF] * m
    upper_new = [INF] * m
    lower_old = [INF] * m
    lower_new = [INF] * m

    corner = settle(0, 0, -INF)
    upper_old[0] = lower_old[0] = corner

    for s in range(1, m):
        lo = max(0, s - w + 1)
        for i in range(lo, s):
            up = upper_new[i - 1] if i > lo else INF
            diag = upper_old[i - 1] if i > 0 else INF
            upper_new[i] = settle(i, s, min(up, diag, upper_old[i]))
        for j in range(lo, s):
            left = lower_new[j - 1] if j > lo else INF
            diag = lower_old[j - 1] if j > 0 else INF
            lower_new[j] = settle(s, j, min(lower_old[j], diag, left))
        if s - 1 >= lo:
            pred = min(upper_new[s - 1], lower_new[s - 1], upper_old[s - 1])
        else:
            pred = upper_old[s - 1]
        corner = settle(s, s, pred)
        upper_new[s] = lower_new[s] = corner
        upper_old, upper_new = upper_new, upper_old
        lower_old, lower_new = lower_new, lower_old

    for s in range(m, n):
        lo = max(0, s - w + 1)
        if lo > m - 1:
            break
        for j in range(lo, m):
            left = lower_new[j - 1] if j > lo else INF
            diag = lower_old[j - 1] if j > 0 else INF
            lower_new[j] = settle(s, j, min(lower_old[j], diag, left))
        lower_old, lower_new = lower_new, lower_old

    return BandedOutcome(value=final, breached=breached, cells_computed=cells, distance_evals=evals)

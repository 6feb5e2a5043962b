"""Width-doubling driver and the certificate-width probe."""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Tuple

from core.banded import BandParams, CutoffMode, banded_pass
from core.dp_core import CostSource, classical_rolling, require_nonempty
from core.geometry import Curve, min_edge_length

logger = logging.getLogger(__name__)

INF = math.inf

# cells of all passes <= WORK_BOUND_FACTOR * final_width * (n + m)
WORK_BOUND_FACTOR = 8


@dataclass(frozen=True)
class Iteration:
    width: int
    threshold_in: float
    value_out: float
    breached: bool
    cells_computed: int
    distance_evals: int


@dataclass(frozen=True)
class AdaptiveOutcome:
    value: float
    final_width: int
    iterations: Tuple[Iteration, ...] = field(default_factory=tuple)

    @property
    def total_cells(self) -> int:
        return sum(it.cells_computed for it in self.iterations)

    @property
    def total_distance_evals(self) -> int:
        return sum(it.distance_evals for it in self.iterations)


def adaptive_compute(source: CostSource) -> AdaptiveOutcome:
    """Exact discrete Fréchet distance by banded passes of doubling width.

    The first pass has no threshold; each later pass is cut at the best
    traversal width found so far. The loop stops at the first unbreached pass
    or once the band covers the whole grid.
    """
    if source.is_empty:
        return AdaptiveOutcome(value=INF, final_width=0)
    if source.rows < source.cols:
        source = source.transposed()
    n = source.rows

    width = 1
    best = INF
    iterations: List[Iteration] = []
    while True:
        outcome = banded_pass(source, BandParams(width, best))
        iterations.append(
            Iteration(
                width=width,
                threshold_in=best,
                value_out=outcome.value,
                breached=outcome.breached,
                cells_computed=outcome.cells_computed,
                distance_evals=outcome.distance_evals,
            )
        )
        logger.debug(
            "pass w=%d t=%s -> value=%s breached=%s cells=%d",
            width, best, outcome.value, outcome.breached, outcome.cells_computed,
        )
        best = min(best, outcome.value)
        if not outcome.breached or width >= n:
            break
        width = min(2 * width, n)

    return AdaptiveOutcome(value=best, final_width=width, iterations=tuple(iterations))


def probe_min_unbreached_width(source: CostSource) -> int:
    """Smallest width whose pass, cut inclusively at the exact distance, stays in band.

    An upper-bound proxy for the certificate width. Breaching is monotone in
    the width at this threshold, so doubling then bisection finds it.
    """
    require_nonempty(source)
    f = classical_rolling(source)
    limit = max(source.rows, source.cols)

    def unbreached(width: int) -> bool:
        return not banded_pass(source, BandParams(width, f, CutoffMode.INCLUSIVE)).breached

    low, high = 0, 1
    while not unbreached(high):
        low = high
        high = min(2 * high, limit)
    # low breaches (or is 0), high does not
    while high - low > 1:
        middle = (low + high) // 2
        if unbreached(middle):
            high = middle
        else:
            low = middle
    logger.debug("probe: f=%s width=%d", f, high)
    return high


def edge_ratio(p: Curve, q: Curve, distance: float) -> float:
    """Fréchet distance relative to the shortest edge of either curve."""
    shortest = min(min_edge_length(p), min_edge_length(q))
    if math.isinf(shortest):
        return 0.0
    if shortest == 0:
        return INF if distance > 0 else 0.0
    return distance / shortest


def is_long_edged(p: Curve, q: Curve, distance: float) -> bool:
    """True when every edge of both curves is longer than ``distance``."""
    return min(min_edge_length(p), min_edge_length(q)) > distance

"""Adaptive discrete Fréchet distance engines."""

from core.adaptive import AdaptiveOutcome, adaptive_compute, probe_min_unbreached_width
from core.banded import BandedOutcome, BandParams, CutoffMode, banded_pass
from core.dp_core import (
    CostSource,
    CurvePairCost,
    DPMatrix,
    MatrixCost,
    brute_force,
    classical_full,
    classical_rolling,
    parse_matrix,
)
from core.geometry import Curve, Point, euclidean_distance, parse_curve, write_curve

__all__ = [
    "AdaptiveOutcome",
    "BandParams",
    "BandedOutcome",
    "CostSource",
    "Curve",
    "CurvePairCost",
    "CutoffMode",
    "DPMatrix",
    "MatrixCost",
    "Point",
    "adaptive_compute",
    "banded_pass",
    "brute_force",
    "classical_full",
    "classical_rolling",
    "euclidean_distance",
    "parse_curve",
    "parse_matrix",
    "probe_min_unbreached_width",
    "write_curve",
]

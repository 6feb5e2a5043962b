"""Seeded random instance generators.

The random stream is Python's ``random.Random`` and only its ``random()``
method is used, whose output sequence is stable across Python releases.
Integer draws are derived from it by flooring.
"""

import math
import random
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from core.errors import MalformedInputError, ParameterError
from core.geometry import Curve, Point

SEED_LIMIT = 2**64 - 1


class GenConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    edge_length: float = Field(default=100.0, gt=0)
    perturb: int = Field(default=10, ge=0)
    seed: int = Field(default=0, ge=0, le=SEED_LIMIT)

    @field_validator("edge_length")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("edge length must be finite")
        return value

    @classmethod
    def build(cls, **values) -> "GenConfig":
        """Validate, reporting failures as :class:`ParameterError`."""
        try:
            return cls(**values)
        except ValidationError as exc:
            raise ParameterError(_summarize(exc)) from None

    def stream(self) -> random.Random:
        return seeded_stream(self.seed)


def seeded_stream(seed: int) -> random.Random:
    if not 0 <= seed <= SEED_LIMIT:
        raise ParameterError(f"seed must be in [0, 2**64-1], got {seed}")
    return random.Random(seed)


def _summarize(exc: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors()
    )


def uniform_int(rng: random.Random, low: int, high: int) -> int:
    """Integer uniform in [low, high], from a single ``random()`` draw."""
    return low + int(rng.random() * (high - low + 1))


def random_point_on_unit_circle(rng: random.Random) -> Point:
    angle = rng.random() * 2.0 * math.pi
    return Point((math.cos(angle), math.sin(angle)))


def random_long_edged_curve(cfg: GenConfig, rng: Optional[random.Random] = None) -> Curve:
    """A 2D curve of ``cfg.n`` points whose consecutive points are ``edge_length`` apart."""
    rng = rng if rng is not None else cfg.stream()
    x, y = random_point_on_unit_circle(rng).coords
    points = [Point((x, y))]
    for _ in range(cfg.n - 1):
        dx, dy = random_point_on_unit_circle(rng).coords
        x += dx * cfg.edge_length
        y += dy * cfg.edge_length
        points.append(Point((x, y)))
    return Curve(tuple(points))


def perturbed_curve(curve: Curve, perturb: int, rng: random.Random) -> Curve:
    """Shift every coordinate by an integer drawn uniformly from [-perturb, perturb]."""
    if perturb < 0:
        raise ParameterError(f"perturbation must be >= 0, got {perturb}")
    if curve.dim is not None and curve.dim != 2:
        raise MalformedInputError(f"perturbation needs a 2D curve, got dimension {curve.dim}")
    points = []
    for point in curve:
        x, y = point.coords
        x += uniform_int(rng, -perturb, perturb)
        y += uniform_int(rng, -perturb, perturb)
        points.append(Point((x, y)))
    return Curve(tuple(points))


def random_grid_curve(n: int, extent: int, rng: random.Random) -> Curve:
    """``n`` i.i.d. points with integer coordinates in [0, extent)."""
    if n < 1 or extent < 1:
        raise ParameterError(f"grid curve needs n >= 1 and extent >= 1, got {n}, {extent}")
    return Curve(
        tuple(
            Point((float(uniform_int(rng, 0, extent - 1)), float(uniform_int(rng, 0, extent - 1))))
            for _ in range(n)
        )
    )

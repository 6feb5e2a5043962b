"""Points, curves, the Euclidean metric and the curve file format."""

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from core.errors import MalformedInputError

_SEPARATORS = re.compile(r"[,\s]+")
_DECIMAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_NON_FINITE = re.compile(r"[+-]?(?:nan|inf|infinity)", re.IGNORECASE)


@dataclass(frozen=True)
class Point:
    coords: Tuple[float, ...]

    def __post_init__(self):
        if len(self.coords) == 0:
            raise MalformedInputError("a point needs at least one coordinate")
        if not all(math.isfinite(x) for x in self.coords):
            raise MalformedInputError(f"non-finite coordinate in {self.coords!r}")

    @classmethod
    def of(cls, *coords: float) -> "Point":
        return cls(tuple(float(x) for x in coords))

    @property
    def dim(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class Curve:
    points: Tuple[Point, ...] = ()

    def __post_init__(self):
        if self.points:
            d = self.points[0].dim
            for index, point in enumerate(self.points):
                if point.dim != d:
                    raise MalformedInputError(
                        f"point {index} has dimension {point.dim}, expected {d}"
                    )

    @classmethod
    def from_coords(cls, rows: Iterable[Sequence[float]]) -> "Curve":
        return cls(tuple(Point.of(*row) for row in rows))

    @property
    def dim(self) -> Optional[int]:
        """Common dimension of the points, or None for the empty curve."""
        return self.points[0].dim if self.points else None

    def coords(self) -> list:
        return [p.coords for p in self.points]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)


def euclidean_distance(a: Point, b: Point) -> float:
    if a.dim != b.dim:
        raise MalformedInputError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return math.dist(a.coords, b.coords)


def min_edge_length(curve: Curve) -> float:
    """Shortest distance between consecutive points; +inf below two points."""
    shortest = math.inf
    for a, b in zip(curve.points, curve.points[1:]):
        shortest = min(shortest, math.dist(a.coords, b.coords))
    return shortest


def format_real(x: float) -> str:
    """Shortest decimal that reads back to the same float; integral values drop '.0'."""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    text = repr(float(x))
    if text.endswith(".0"):
        text = text[:-2]
    return text


def split_fields(line: str) -> list:
    return [token for token in _SEPARATORS.split(line.strip()) if token]


def parse_decimal(token: str, *, line: int, source: Optional[str] = None) -> float:
    if _NON_FINITE.fullmatch(token):
        raise MalformedInputError(f"non-finite literal {token!r}", line=line, source=source)
    if not _DECIMAL.fullmatch(token):
        raise MalformedInputError(f"not a number: {token!r}", line=line, source=source)
    value = float(token)
    if not math.isfinite(value):
        raise MalformedInputError(f"literal {token!r} overflows", line=line, source=source)
    return value


def data_lines(text: str) -> Iterator[Tuple[int, str]]:
    """Yield (line number, content) for lines that are neither blank nor comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped


def parse_curve(text: str, *, source: Optional[str] = None) -> Curve:
    """One point per line, coordinates split on commas or whitespace.

    Every data line must have the dimension of the first; `#` lines and blank
    lines are skipped.
    """
    rows = []
    dim = None
    for number, content in data_lines(text):
        fields = split_fields(content)
        if dim is None:
            dim = len(fields)
        elif len(fields) != dim:
            raise MalformedInputError(
                f"expected {dim} coordinates, found {len(fields)}", line=number, source=source
            )
        rows.append(Point(tuple(parse_decimal(f, line=number, source=source) for f in fields)))
    return Curve(tuple(rows))


def write_curve(curve: Curve) -> str:
    """Comma-separated coordinates, one point per line, in shortest round-trip form."""
    return "".join(",".join(format_real(x) for x in p.coords) + "\n" for p in curve)

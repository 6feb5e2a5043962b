"""Reading curve and matrix files given on the command line."""

import logging
from pathlib import Path
from typing import Optional, Tuple

import chardet

from app.core.exit_codes import UsageError
from core.dp_core import CostSource, CurvePairCost, parse_matrix
from core.errors import MalformedInputError
from core.geometry import Curve, parse_curve

logger = logging.getLogger(__name__)


def read_text(path: str) -> str:
    """Decode a UTF-8 file; anything else is rejected with the detected encoding."""
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise MalformedInputError(f"cannot read file: {exc.strerror}", source=path) from None
    try:
        return data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        guess = chardet.detect(data)
        encoding = guess.get("encoding") or "unknown"
        logger.debug("%s: chardet guess %s", path, guess)
        raise MalformedInputError(
            f"not UTF-8 (looks like {encoding}, byte offset {exc.start})", source=path
        ) from None


def load_curve(path: str) -> Curve:
    return parse_curve(read_text(path), source=path)


def load_source(
    p: Optional[str], q: Optional[str], matrix: Optional[str], *, dash_as_inf: bool = False
) -> Tuple[CostSource, Optional[Tuple[Curve, Curve]]]:
    """Resolve exactly one input form: a curve pair or an explicit matrix.

    Returns the cost source and, for curve inputs, the curves themselves.
    """
    if matrix is not None:
        if p is not None or q is not None:
            raise UsageError("give either --p/--q or --matrix, not both")
        return parse_matrix(read_text(matrix), dash_as_inf=dash_as_inf, source=matrix), None
    if p is None or q is None:
        raise UsageError("need both --p and --q, or --matrix")
    first, second = load_curve(p), load_curve(q)
    return CurvePairCost(first, second), (first, second)

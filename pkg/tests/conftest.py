from pathlib import Path

import pytest

from core.dp_core import MatrixCost, parse_matrix

DATA = Path(__file__).parent / "data"


@pytest.fixture
def sample_path() -> Path:
    return DATA / "sample_euclid.tsv"


@pytest.fixture
def sample(sample_path) -> MatrixCost:
    """Euclidean matrix of the 6x6 long-edged example; its distance is 13.45."""
    return parse_matrix(sample_path.read_text(encoding="utf-8"))


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (DATA / name).read_text(encoding="utf-8")

    return read

"""Records written by the command line: bench rows and the --stats line."""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from core.geometry import format_real

CSV_HEADER = ["n", "L", "d", "seed", "algo", "value", "final_width", "probe_width", "cells", "dist_evals", "ns"]

ALGORITHMS = ("classical", "adaptive")


class BenchPlan(BaseModel):
    model_config = ConfigDict(frozen=True)

    sizes: List[int] = Field(min_length=1)
    trials: int = Field(ge=1)
    seed: int = Field(ge=0, le=2**64 - 1)
    edge_length: float = Field(default=100.0, gt=0)
    perturb: int = Field(default=10, ge=0)
    algos: List[str] = Field(default_factory=lambda: list(ALGORITHMS))
    workers: int = Field(default=1, ge=1)

    @field_validator("sizes")
    @classmethod
    def _positive_sizes(cls, sizes: List[int]) -> List[int]:
        if any(n < 1 for n in sizes):
            raise ValueError("sizes must be positive")
        return sizes

    @field_validator("algos")
    @classmethod
    def _known_algos(cls, algos: List[str]) -> List[str]:
        unknown = sorted(set(algos) - set(ALGORITHMS))
        if unknown or not algos:
            raise ValueError(f"unknown algorithms {unknown}; choose from {list(ALGORITHMS)}")
        return algos


class BenchRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    L: float
    d: int
    seed: int
    trial: int = Field(exclude=True)
    algo: str
    value: float
    final_width: int
    probe_width: int
    cells: int
    dist_evals: int
    ns: int

    def sort_key(self):
        return self.n, self.trial, self.algo

    def csv_row(self) -> List[str]:
        return [
            str(self.n),
            format_real(self.L),
            str(self.d),
            str(self.seed),
            self.algo,
            format_real(self.value),
            str(self.final_width),
            str(self.probe_width),
            str(self.cells),
            str(self.dist_evals),
            str(self.ns),
        ]


class ComputeStats(BaseModel):
    algo: str
    n: int
    m: int
    value: str
    final_width: Optional[int] = None
    iterations: Optional[int] = None
    cells: Optional[int] = None
    dist_evals: Optional[int] = None
    ns: int


class ProbeStats(BaseModel):
    width: int
    value: str
    edge_ratio: Optional[str] = None

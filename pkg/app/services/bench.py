"""Benchmark harness: generated long-edged pairs, timed engines, bound checks."""

import csv
import hashlib
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, TextIO, Tuple

from app.models.records import CSV_HEADER, BenchPlan, BenchRecord
from core.adaptive import WORK_BOUND_FACTOR, adaptive_compute, probe_min_unbreached_width
from core.dp_core import CurvePairCost, classical_rolling
from core.errors import InvariantViolation
from core.generators import GenConfig, perturbed_curve, random_long_edged_curve

logger = logging.getLogger(__name__)


def trial_seed(seed: int, n: int, trial: int) -> int:
    digest = hashlib.sha256(f"{seed}:{n}:{trial}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


def build_instance(plan: BenchPlan, n: int, trial: int) -> Tuple[int, CurvePairCost]:
    seed = trial_seed(plan.seed, n, trial)
    cfg = GenConfig.build(n=n, edge_length=plan.edge_length, perturb=plan.perturb, seed=seed)
    rng = cfg.stream()
    p = random_long_edged_curve(cfg, rng)
    q = perturbed_curve(p, plan.perturb, rng)
    return seed, CurvePairCost(p, q)


def run_trial(plan: BenchPlan, n: int, trial: int) -> List[BenchRecord]:
    seed, source = build_instance(plan, n, trial)
    probe = probe_min_unbreached_width(source)
    records = []
    for algo in plan.algos:
        start = time.perf_counter_ns()
        if algo == "classical":
            value = classical_rolling(source)
            elapsed = time.perf_counter_ns() - start
            final_width = max(source.shape)
            cells = evals = source.rows * source.cols
        else:
            outcome = adaptive_compute(source)
            elapsed = time.perf_counter_ns() - start
            value = outcome.value
            final_width = outcome.final_width
            cells = outcome.total_cells
            evals = outcome.total_distance_evals
        records.append(
            BenchRecord(
                n=n,
                L=plan.edge_length,
                d=plan.perturb,
                seed=seed,
                trial=trial,
                algo=algo,
                value=value,
                final_width=final_width,
                probe_width=probe,
                cells=cells,
                dist_evals=evals,
                ns=elapsed,
            )
        )
    check_trial(records, source.rows + source.cols)
    logger.info("n=%d trial=%d probe=%d done", n, trial, probe)
    return records


def check_trial(records: List[BenchRecord], size: int) -> None:
    """Cross-engine equality and the adaptive work bound; overshoot is only logged."""
    values = {r.value for r in records}
    if len(values) > 1:
        raise InvariantViolation(
            f"engines disagree on n={records[0].n} seed={records[0].seed}: "
            + ", ".join(f"{r.algo}={r.value!r}" for r in records)
        )
    for r in records:
        if r.algo != "adaptive":
            continue
        if r.cells > WORK_BOUND_FACTOR * r.final_width * size:
            raise InvariantViolation(
                f"adaptive computed {r.cells} cells, above {WORK_BOUND_FACTOR}*{r.final_width}*{size}"
            )
        if r.final_width > 2 * r.probe_width:
            logger.warning(
                "n=%d seed=%d: final width %d exceeds twice the probe width %d",
                r.n, r.seed, r.final_width, r.probe_width,
            )


def _run_task(task: Tuple[BenchPlan, int, int]) -> List[BenchRecord]:
    return run_trial(*task)


def run_bench(plan: BenchPlan) -> List[BenchRecord]:
    tasks = [(plan, n, trial) for n in plan.sizes for trial in range(plan.trials)]
    if plan.workers > 1:
        with ProcessPoolExecutor(max_workers=plan.workers) as pool:
            batches = list(pool.map(_run_task, tasks))
    else:
        batches = [_run_task(task) for task in tasks]
    records = [record for batch in batches for record in batch]
    return sorted(records, key=BenchRecord.sort_key)


def write_csv(records: Iterable[BenchRecord], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(record.csv_row())

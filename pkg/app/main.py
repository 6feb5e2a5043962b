"""Command line: compute, gen, dump, probe and bench."""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Sequence

from app.config import Settings, settings as default_settings
from app.core import exit_codes
from app.core.exit_codes import UsageError
from app.core.log import setup_logging
from app.models.records import ALGORITHMS, BenchPlan, ComputeStats, ProbeStats
from app.services import bench
from app.services.inputs import load_curve, load_source
from core.adaptive import adaptive_compute, edge_ratio, probe_min_unbreached_width
from core.banded import BandParams, CutoffMode
from core.dp_core import CostSource, brute_force, classical_rolling
from core.errors import InvariantViolation
from core.generators import (
    GenConfig,
    perturbed_curve,
    random_grid_curve,
    random_long_edged_curve,
    seeded_stream,
)
from core.geometry import format_real, write_curve
from core.matrices import banded_matrix_dump, cost_grid, euclidean_matrix, frechet_matrix, render_matrix

logger = logging.getLogger("frechet")


class Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1."""

    def error(self, message):
        raise UsageError(message)


def _threshold(text: str) -> float:
    value = float(text)
    if value != value:
        raise argparse.ArgumentTypeError("threshold cannot be NaN")
    return value


def _sizes(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of sizes: {text!r}") from None


def _algos(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _add_inputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", metavar="FILE", help="first curve file")
    parser.add_argument("--q", metavar="FILE", help="second curve file")
    parser.add_argument("--matrix", metavar="FILE", help="explicit cost matrix file")
    parser.add_argument("--dash-as-inf", action="store_true", help="read '-' entries in --matrix as inf")


def build_parser() -> Parser:
    parser = Parser(prog="frechet", description="Adaptive discrete Fréchet distance")
    parser.add_argument("--log-level", default=None, help="logging level (default from FRECHET_LOG_LEVEL)")
    parser.add_argument("-v", "--verbose", action="store_true", help="shorthand for --log-level DEBUG")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    compute = commands.add_parser("compute", help="print the distance")
    _add_inputs(compute)
    compute.add_argument("--algo", choices=["adaptive", "classical", "brute"], default="adaptive")
    compute.add_argument("--stats", action="store_true", help="one JSON stats line on stderr")
    compute.add_argument("--verify", action="store_true", help="cross-check adaptive against classical")

    gen = commands.add_parser("gen", help="generate a curve")
    gen.add_argument("--kind", choices=["long-edged", "perturbed", "grid"], required=True)
    gen.add_argument("-n", type=int, help="number of points")
    gen.add_argument("--edge-length", type=float, default=100.0)
    gen.add_argument("--perturb", type=int, default=10)
    gen.add_argument("--extent", type=int, default=100, help="grid side for --kind grid")
    gen.add_argument("--base", metavar="FILE", help="curve to perturb")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", metavar="FILE")

    dump = commands.add_parser("dump", help="print a full matrix")
    dump.add_argument("--kind", choices=["euclid", "frechet", "banded"], required=True)
    _add_inputs(dump)
    dump.add_argument("-w", "--width", type=int)
    dump.add_argument("-t", "--threshold", type=_threshold)
    dump.add_argument("--inclusive", action="store_true", help="admit costs equal to the threshold")
    dump.add_argument("--header", action="store_true", help="prefix a '# n= m=' comment line")

    probe = commands.add_parser("probe", help="print the smallest unbreached width")
    _add_inputs(probe)
    probe.add_argument("--stats", action="store_true", help="one JSON line with distance and edge ratio on stderr")

    bench_cmd = commands.add_parser("bench", help="benchmark on generated instances")
    bench_cmd.add_argument("--gen", choices=["long-edged"], default="long-edged")
    bench_cmd.add_argument("--sizes", type=_sizes, required=True)
    bench_cmd.add_argument("--trials", type=int, required=True)
    bench_cmd.add_argument("--seed", type=int, required=True)
    bench_cmd.add_argument("--edge-length", type=float, default=100.0)
    bench_cmd.add_argument("--perturb", type=int, default=10)
    bench_cmd.add_argument("--algos", type=_algos, default=list(ALGORITHMS))
    bench_cmd.add_argument("--workers", type=int, default=None)
    bench_cmd.add_argument("--out", metavar="FILE")
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_compute(args, cfg: Settings) -> int:
    source, _ = load_source(args.p, args.q, args.matrix, dash_as_inf=args.dash_as_inf)
    start = time.perf_counter_ns()
    stats = dict(algo=args.algo, n=source.rows, m=source.cols)
    if args.algo == "adaptive":
        outcome = adaptive_compute(source)
        value = outcome.value
        stats.update(
            final_width=outcome.final_width,
            iterations=len(outcome.iterations),
            cells=outcome.total_cells,
            dist_evals=outcome.total_distance_evals,
        )
    elif args.algo == "classical":
        value = _classical(source)
        stats.update(cells=source.rows * source.cols, dist_evals=source.rows * source.cols)
    else:
        value = brute_force(source, max_size=cfg.brute_force_max_size)
    elapsed = time.perf_counter_ns() - start

    if args.verify:
        expected = _classical(source)
        checks = {args.algo: value}
        if args.algo != "adaptive":
            checks["adaptive"] = adaptive_compute(source).value
        for name, got in checks.items():
            if got != expected:
                raise InvariantViolation(
                    f"{name}={format_real(got)} but classical={format_real(expected)}"
                )
    sys.stdout.write(format_real(value) + "\n")
    if args.stats:
        record = ComputeStats(value=format_real(value), ns=elapsed, **stats)
        sys.stderr.write(record.model_dump_json() + "\n")
    return exit_codes.OK


def _classical(source: CostSource) -> float:
    # empty curves follow the adaptive convention
    return float("inf") if source.is_empty else classical_rolling(source)


def cmd_gen(args, cfg: Settings) -> int:
    if args.kind == "perturbed":
        if args.base is None:
            raise UsageError("--kind perturbed needs --base FILE")
        curve = perturbed_curve(load_curve(args.base), args.perturb, seeded_stream(args.seed))
    else:
        if args.n is None:
            raise UsageError(f"--kind {args.kind} needs -n")
        params = GenConfig.build(n=args.n, edge_length=args.edge_length, perturb=args.perturb, seed=args.seed)
        if args.kind == "long-edged":
            curve = random_long_edged_curve(params)
        else:
            curve = random_grid_curve(params.n, args.extent, params.stream())
    _emit(write_curve(curve), args.out)
    return exit_codes.OK


def cmd_dump(args, cfg: Settings) -> int:
    source, curves = load_source(args.p, args.q, args.matrix, dash_as_inf=args.dash_as_inf)
    cap = cfg.dump_cell_cap
    if args.kind == "euclid":
        grid = euclidean_matrix(*curves, max_cells=cap) if curves else cost_grid(source, max_cells=cap)
    elif args.kind == "frechet":
        grid = frechet_matrix(source, max_cells=cap)
    else:
        if args.width is None or args.threshold is None:
            raise UsageError("--kind banded needs -w and -t")
        cutoff = CutoffMode.INCLUSIVE if args.inclusive else CutoffMode.STRICT
        grid = banded_matrix_dump(source, BandParams(args.width, args.threshold, cutoff), max_cells=cap)
    sys.stdout.write(render_matrix(grid, header=args.header))
    return exit_codes.OK


def cmd_probe(args, cfg: Settings) -> int:
    source, curves = load_source(args.p, args.q, args.matrix, dash_as_inf=args.dash_as_inf)
    width = probe_min_unbreached_width(source)
    sys.stdout.write(f"{width}\n")
    if args.stats:
        distance = classical_rolling(source)
        ratio = format_real(edge_ratio(*curves, distance)) if curves else None
        record = ProbeStats(width=width, value=format_real(distance), edge_ratio=ratio)
        sys.stderr.write(record.model_dump_json() + "\n")
    return exit_codes.OK


def cmd_bench(args, cfg: Settings) -> int:
    if args.trials is not None and args.trials < 1:
        raise UsageError("--trials must be >= 1")
    try:
        plan = BenchPlan(
            sizes=args.sizes,
            trials=args.trials,
            seed=args.seed,
            edge_length=args.edge_length,
            perturb=args.perturb,
            algos=args.algos,
            workers=args.workers or cfg.bench_workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = bench.run_bench(plan)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as stream:
            bench.write_csv(records, stream)
    else:
        bench.write_csv(records, sys.stdout)
    return exit_codes.OK


COMMANDS = {
    "compute": cmd_compute,
    "gen": cmd_gen,
    "dump": cmd_dump,
    "probe": cmd_probe,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None, cfg: Optional[Settings] = None) -> int:
    """Run the command line and return the exit status."""
    cfg = cfg or default_settings
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        setup_logging(cfg.log_level)
        logger.error("%s", exc)
        return exit_codes.USAGE
    setup_logging("DEBUG" if args.verbose else (args.log_level or cfg.log_level))
    try:
        return COMMANDS[args.command](args, cfg)
    except Exception as exc:
        code = exit_codes.exit_code_for(exc)
        if code == exit_codes.INVARIANT and not isinstance(exc, InvariantViolation):
            logger.exception("internal error")
        else:
            logger.error("%s", exc)
        return code


if __name__ == "__main__":
    sys.exit(main())

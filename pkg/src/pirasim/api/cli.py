"""
``pirasim`` command line.

Exit codes: 0 ok, 1 usage, 2 data error (parse, config, truncated trace, missing
file), 3 infeasible strategy.
"""

import argparse
import json
import logging
import statistics
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Mapping, Sequence, Tuple

from pirasim.application import (
    aggregate,
    episode_specs,
    latency_summary,
    normalize_sweep,
    summarize,
)
from pirasim.configuration import (
    Settings,
    build_runner,
    configure_logging,
    is_strategy_name,
    load_config,
)
from pirasim.configuration.logging_setup import LEVELS
from pirasim.domain import Period, PruningMode, TraceFile, Workload
from pirasim.domain.exceptions import CannotRunInfeasibleStrategyException, DomainException
from pirasim.infrastructure import (
    generate_workload,
    parse_trace,
    parse_workload,
    synthesize_traces,
    write_json,
    write_rows,
    write_trace,
    write_workload,
)
from pirasim.infrastructure.report_writer import EPISODE_COLUMNS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INFEASIBLE = 3

PERIODS = [period.value for period in Period]


class UsageError(Exception):
    """Bad arguments found after parsing; exits like an argparse error."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _strategy(value: str) -> str:
    if not is_strategy_name(value):
        raise argparse.ArgumentTypeError(f"unknown strategy '{value}' (pira, production, oracle, pure-<id>)")
    return value


def _strategy_list(value: str) -> List[str]:
    return [_strategy(item.strip()) for item in value.split(",") if item.strip()]


def _float_list(value: str) -> List[float]:
    try:
        return [float(item) for item in value.split(",") if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{value}'") from e


def _experiment_flags() -> argparse.ArgumentParser:
    # parents share action objects, so each subcommand gets its own copy of these flags
    experiment = argparse.ArgumentParser(add_help=False)
    experiment.add_argument("--seed", type=int, help="First replication seed.")
    experiment.add_argument("--replications", type=int, help="Seeds per period and strategy.")
    experiment.add_argument("--workers", type=int, help="Worker threads.")
    experiment.add_argument("--gamma", type=float, help="Cost weight of the utility.")
    experiment.add_argument("--horizon", type=int, help="Planning horizon in requests.")
    experiment.add_argument("--pruning", choices=[mode.value for mode in PruningMode], help="Planner pruning mode.")
    experiment.add_argument("--workload", type=Path, help="Workload file; generated per seed when omitted.")
    experiment.add_argument("--out", type=Path, required=True, help="Report directory.")
    return experiment


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="Flat key=value settings file.")
    common.add_argument("--log-level", choices=LEVELS, default="WARNING", help="Logging level on stderr.")

    parser = _ArgumentParser(
        prog="pirasim",
        description="Pan-CDN and range-duration selection simulator for short-video streaming.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    simulate = commands.add_parser("simulate", parents=[common, _experiment_flags()], help="Run one strategy.")
    simulate.add_argument("--strategy", type=_strategy, default="pira")
    simulate.add_argument("--traces", type=Path, help="Trace file; synthesized for --period when omitted.")
    simulate.add_argument("--period", choices=PERIODS, default=Period.OFF_PEAK.value)
    simulate.set_defaults(handler=cmd_simulate, replications=1)

    compare = commands.add_parser(
        "compare", parents=[common, _experiment_flags()], help="Compare strategies per period."
    )
    compare.add_argument("--strategy", type=_strategy_list, help="Comma-separated strategies.")
    compare.add_argument("--traces", type=Path, nargs="+", help="Trace files, one per period.")
    compare.add_argument("--period", choices=PERIODS, nargs="+", help="Periods to synthesize.")
    compare.set_defaults(handler=cmd_compare)

    sweep = commands.add_parser("sweep", parents=[common, _experiment_flags()], help="Sweep gamma or the horizon.")
    sweep.add_argument("--axis", choices=["gamma", "horizon"], required=True)
    sweep.add_argument("--values", type=_float_list, required=True, help="Comma-separated axis values.")
    sweep.add_argument("--strategy", type=_strategy, default="pira")
    sweep.add_argument("--traces", type=Path, help="Trace file; synthesized for --period when omitted.")
    sweep.add_argument("--period", choices=PERIODS, default=Period.OFF_PEAK.value)
    sweep.set_defaults(handler=cmd_sweep)

    gen_traces = commands.add_parser("gen-traces", parents=[common], help="Write a synthetic trace file.")
    gen_traces.add_argument("--period", choices=PERIODS, default=Period.OFF_PEAK.value)
    gen_traces.add_argument("--seed", type=int)
    gen_traces.add_argument("--length", type=int, help="Trace length in seconds.")
    gen_traces.add_argument("--out", type=Path, required=True, help="Trace file to write.")
    gen_traces.set_defaults(handler=cmd_gen_traces)

    gen_workload = commands.add_parser("gen-workload", parents=[common], help="Write a synthetic workload file.")
    gen_workload.add_argument("--seed", type=int)
    gen_workload.add_argument("--videos", type=int, help="Number of videos.")
    gen_workload.add_argument("--out", type=Path, required=True, help="Workload file to write.")
    gen_workload.set_defaults(handler=cmd_gen_workload)

    validate = commands.add_parser("validate", parents=[common], help="Check trace and workload files.")
    validate.add_argument("--traces", type=Path, nargs="*", default=[])
    validate.add_argument("--workload", type=Path)
    validate.set_defaults(handler=cmd_validate)

    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, object]:
    return {
        "seed": getattr(args, "seed", None),
        "replications": getattr(args, "replications", None),
        "workers": getattr(args, "workers", None),
        "gamma": getattr(args, "gamma", None),
        "horizon_n": getattr(args, "horizon", None),
        "pruning": getattr(args, "pruning", None),
        "trace_length_s": getattr(args, "length", None),
        "video_count": getattr(args, "videos", None),
    }


def _trace_source(settings: Settings, files: Sequence[Path]) -> Tuple[Callable[[Period], TraceFile], List[Period]]:
    if not files:
        return (lambda period: synthesize_traces(settings.synth_config(period))), list(settings.periods)
    traces: Dict[Period, TraceFile] = {}
    for path in files:
        trace_file = parse_trace(path)
        traces[trace_file.period] = trace_file
    return traces.__getitem__, sorted(traces, key=PERIODS.index)


def _workload_source(settings: Settings, path: Path | None) -> Callable[[int], Workload]:
    if path is None:
        return lambda seed: generate_workload(settings.workload_config(seed))
    workload = parse_workload(path, settings.chunk_duration_s)
    return lambda seed: workload


def _inputs(args: argparse.Namespace) -> dict:
    traces = getattr(args, "traces", None)
    if isinstance(traces, Path):
        traces = [traces]
    return {
        "config": str(args.config) if args.config else None,
        "traces": [str(path) for path in traces or []],
        "workload": str(args.workload) if getattr(args, "workload", None) else None,
    }


def _write_reports(
    out: Path, summary: Mapping, rows: Sequence[Mapping], timing: Mapping, columns=EPISODE_COLUMNS
) -> None:
    write_json(out / "summary.json", summary)
    write_rows(out / "episodes.csv", rows, columns)
    # wall-clock figures live apart so summary.json is byte-identical across reruns
    write_json(out / "timing.json", timing)


def _print_table(rows: Sequence[Mapping]) -> None:
    print(f"{'period':<13} {'strategy':<11} {'rebuffer':>18} {'startup_s':>18} {'norm_cost':>9} {'utility':>18}")
    for row in rows:
        cells = [_ci(row[metric]) for metric in ("rebuffer_ratio", "mean_startup_s", "utility")]
        print(f"{row['period']:<13} {row['strategy']:<11} {cells[0]:>18} {cells[1]:>18} "
              f"{row['normalized_cost']:>9.3f} {cells[2]:>18}")


def _ci(summary: Mapping) -> str:
    return f"{summary['mean']:.4f}±{summary['mean'] - summary['ci_low']:.4f}"


def _run(settings: Settings, args: argparse.Namespace, periods: List[Period], strategies: List[str], trace_files):
    trace_source, available = _trace_source(settings, trace_files)
    if trace_files:
        periods = available
    runner = build_runner(settings, trace_source, _workload_source(settings, args.workload))
    return runner.run(episode_specs(periods, strategies, settings.replication_seeds())), periods


def cmd_simulate(settings: Settings, args: argparse.Namespace) -> int:
    trace_files = [args.traces] if args.traces else []
    results, periods = _run(settings, args, [Period(args.period)], [args.strategy], trace_files)
    rows = aggregate(results)
    summary = {
        "command": "simulate",
        "strategy": args.strategy,
        "periods": [period.value for period in periods],
        "seeds": list(settings.replication_seeds()),
        "inputs": _inputs(args),
        "settings": settings.to_dict(),
        "aggregates": rows,
        "episodes": [result.summary() for result in results],
    }
    timing = {"decision_latency": latency_summary(results)}
    _write_reports(args.out, summary, [result.summary() for result in results], timing)
    _print_table(rows)
    return EXIT_OK


def cmd_compare(settings: Settings, args: argparse.Namespace) -> int:
    strategies = args.strategy or list(settings.strategies)
    periods = [Period(period) for period in args.period] if args.period else list(settings.periods)
    results, periods = _run(settings, args, periods, strategies, args.traces or [])
    rows = aggregate(results)
    summary = {
        "command": "compare",
        "strategies": strategies,
        "periods": [period.value for period in periods],
        "seeds": list(settings.replication_seeds()),
        "inputs": _inputs(args),
        "settings": settings.to_dict(),
        "aggregates": rows,
    }
    timing = {
        f"{period.value}/{strategy}": latency_summary(
            result for result in results if result.period == period and result.strategy == strategy
        )
        for period in periods
        for strategy in strategies
    }
    _write_reports(args.out, summary, [result.summary() for result in results], timing)
    _print_table(rows)
    return EXIT_OK


def cmd_sweep(settings: Settings, args: argparse.Namespace) -> int:
    if not args.values:
        raise UsageError("--values needs at least one value")
    if args.axis == "horizon" and any(value != int(value) or value < 1 for value in args.values):
        raise UsageError(f"horizon values must be positive integers, got {args.values}")

    trace_files = [args.traces] if args.traces else []
    points: Dict[float, float] = {}
    details = []
    episode_rows = []
    timing = {}
    for value in args.values:
        if args.axis == "gamma":
            point = settings.with_values(gamma=value).validate()
        else:
            point = settings.with_values(horizon_n=int(value)).validate()
        started = time.perf_counter()
        results, periods = _run(point, args, [Period(args.period)], [args.strategy], trace_files)
        elapsed = time.perf_counter() - started

        utilities = summarize([result.utility for result in results])
        points[value] = utilities.mean
        details.append(
            {
                "value": value,
                "utility": utilities.to_dict(),
                "rebuffer_ratio": summarize([result.rebuffer_ratio for result in results]).to_dict(),
                "total_cost": summarize([result.total_cost for result in results]).to_dict(),
                "scored_sequences": sum(result.scored_sequences for result in results),
                "decisions": sum(result.decisions for result in results),
            }
        )
        episode_rows.extend(dict(result.summary(), value=value) for result in results)
        timing[repr(value)] = {
            "wall_clock_s": elapsed,
            "decide_s": sum(sum(result.decision_latencies_s) for result in results),
            "decision_latency": latency_summary(results),
        }

    normalized = normalize_sweep(points)
    for detail in details:
        detail["normalized_performance"] = normalized[detail["value"]]

    summary = {
        "command": "sweep",
        "axis": args.axis,
        "strategy": args.strategy,
        "periods": [period.value for period in periods],
        "seeds": list(settings.replication_seeds()),
        "inputs": _inputs(args),
        "settings": settings.to_dict(),
        "points": details,
    }
    _write_reports(args.out, summary, episode_rows, timing, ["value"] + EPISODE_COLUMNS)
    for detail in details:
        print(
            f"{args.axis}={detail['value']:g} normalized={detail['normalized_performance']:.4f} "
            f"scored={detail['scored_sequences']}"
        )
    return EXIT_OK


def cmd_gen_traces(settings: Settings, args: argparse.Namespace) -> int:
    config = settings.synth_config(Period(args.period), seed=args.seed)
    traces = synthesize_traces(config)
    write_trace(args.out, traces)
    print(json.dumps(_trace_summary(traces), sort_keys=True))
    return EXIT_OK


def cmd_gen_workload(settings: Settings, args: argparse.Namespace) -> int:
    workload = generate_workload(settings.workload_config(seed=args.seed))
    write_workload(args.out, workload)
    print(json.dumps(_workload_summary(workload), sort_keys=True))
    return EXIT_OK


def cmd_validate(settings: Settings, args: argparse.Namespace) -> int:
    if not args.traces and args.workload is None:
        raise UsageError("validate needs --traces and/or --workload")
    report = {"traces": [], "workload": None}
    for path in args.traces:
        report["traces"].append(dict(_trace_summary(parse_trace(path)), path=str(path)))
    if args.workload is not None:
        workload = parse_workload(args.workload, settings.chunk_duration_s)
        report["workload"] = dict(_workload_summary(workload), path=str(args.workload))
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def _trace_summary(traces: TraceFile) -> dict:
    summary = traces.to_dict()
    summary["mean_mbps"] = {str(k): traces.trace_of(k).mean_mbps for k in traces.pan_cdn_ids}
    return summary


def _workload_summary(workload: Workload) -> dict:
    media = workload.media
    summary = workload.to_dict()
    if len(media):
        summary["short_fraction"] = sum(1 for video in media.videos if video.duration_s < 30.0) / len(media)
        summary["median_watch_s"] = statistics.median(media.watch_duration_s)
    summary["total_watch_s"] = media.total_watch_s()
    return summary


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    configure_logging(args.log_level)

    try:
        settings = load_config(args.config, _overrides(args))
        logger.info("Running %s", args.command)
        return args.handler(settings, args)
    except UsageError as e:
        print(f"pirasim: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CannotRunInfeasibleStrategyException as e:
        print(f"pirasim: infeasible strategy: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (DomainException, OSError) as e:
        print(f"pirasim: error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

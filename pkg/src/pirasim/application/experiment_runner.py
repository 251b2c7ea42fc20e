"""
Replicated experiments over periods, strategies and seeds.

Episodes fan out over worker threads; every aggregate is computed from results
sorted by (period, strategy, seed), so the merge order never matters.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np
from scipy import stats

from pirasim.application.episode_simulator import EpisodeSimulator
from pirasim.domain import EpisodeResult, IStrategy, Period, TraceFile, Workload

logger = logging.getLogger(__name__)

CONFIDENCE = 0.95
METRICS = ("rebuffer_ratio", "mean_startup_s", "total_cost", "utility", "qoe")


@dataclass(frozen=True)
class EpisodeSpec:
    period: Period
    strategy: str
    seed: int

    def sort_key(self) -> Tuple[str, str, int]:
        return (self.period.value, self.strategy, self.seed)


@dataclass(frozen=True)
class MetricSummary:
    mean: float
    half_width: float
    count: int

    @property
    def low(self) -> float:
        return self.mean - self.half_width

    @property
    def high(self) -> float:
        return self.mean + self.half_width

    def to_dict(self) -> dict:
        return {"mean": self.mean, "ci_low": self.low, "ci_high": self.high, "n": self.count}


def summarize(values: Sequence[float], confidence: float = CONFIDENCE) -> MetricSummary:
    """Mean with a Student-t confidence interval over independent replications."""
    data = np.asarray(values, dtype=np.float64)
    if data.size == 0:
        return MetricSummary(0.0, 0.0, 0)
    mean = float(data.mean())
    if data.size < 2:
        return MetricSummary(mean, 0.0, 1)
    quantile = float(stats.t.ppf(0.5 + confidence / 2.0, data.size - 1))
    half_width = quantile * float(data.std(ddof=1)) / math.sqrt(data.size)
    return MetricSummary(mean, half_width, int(data.size))


def sort_results(results: Iterable[EpisodeResult]) -> List[EpisodeResult]:
    return sorted(results, key=lambda result: (result.period.value, result.strategy, result.seed))


def aggregate(results: Iterable[EpisodeResult]) -> List[dict]:
    """
    One row per (period, strategy) with mean and 95% interval of every metric.

    ``normalized_cost`` divides each mean cost by the largest mean cost of the
    period, so the most expensive strategy scores exactly 1.0.
    """
    groups: Dict[Tuple[str, str], List[EpisodeResult]] = {}
    for result in sort_results(results):
        groups.setdefault((result.period.value, result.strategy), []).append(result)

    rows = []
    for (period, strategy), members in groups.items():
        row = {"period": period, "strategy": strategy, "episodes": len(members)}
        for metric in METRICS:
            row[metric] = summarize([getattr(member, metric) for member in members]).to_dict()
        row["scored_sequences"] = sum(member.scored_sequences for member in members)
        shares = _mean_shares(members)
        row["byte_shares"] = {str(pan_cdn_id): share for pan_cdn_id, share in sorted(shares.items())}
        rows.append(row)

    top_cost: Dict[str, float] = {}
    for row in rows:
        top_cost[row["period"]] = max(top_cost.get(row["period"], 0.0), row["total_cost"]["mean"])
    for row in rows:
        top = top_cost[row["period"]]
        row["normalized_cost"] = row["total_cost"]["mean"] / top if top > 0 else 0.0
    return rows


def _mean_shares(results: Sequence[EpisodeResult]) -> Dict[int, float]:
    totals: Dict[int, float] = {}
    for result in results:
        for pan_cdn_id, megabits in result.metrics.megabits_by_cdn.items():
            totals[pan_cdn_id] = totals.get(pan_cdn_id, 0.0) + megabits
    grand_total = sum(totals.values())
    return {pan_cdn_id: megabits / grand_total for pan_cdn_id, megabits in totals.items()} if grand_total else {}


def latency_summary(results: Iterable[EpisodeResult]) -> dict:
    latencies = np.asarray([latency for result in results for latency in result.decision_latencies_s])
    if latencies.size == 0:
        return {"decisions": 0, "mean_s": 0.0, "p50_s": 0.0, "p99_s": 0.0, "max_s": 0.0}
    return {
        "decisions": int(latencies.size),
        "mean_s": float(latencies.mean()),
        "p50_s": float(np.percentile(latencies, 50)),
        "p99_s": float(np.percentile(latencies, 99)),
        "max_s": float(latencies.max()),
    }


def normalize_sweep(points: Mapping[float, float]) -> Dict[float, float]:
    """Scale mean utilities so the best sweep value is 1.0."""
    if not points:
        return {}
    best = max(points.values())
    if best <= 0:
        return dict(points)
    return {value: utility / best for value, utility in points.items()}


class ExperimentRunner:
    """
    Runs episode specs against shared traces and workloads.

    Args:
        simulator: Episode engine; stateless between episodes.
        strategy_factory: Builds a fresh strategy for a strategy name.
        trace_source: Trace file of a period.
        workload_source: Workload of a seed.
        workers: Worker threads for the fan-out.
    """

    def __init__(
        self,
        simulator: EpisodeSimulator,
        strategy_factory: Callable[[str], IStrategy],
        trace_source: Callable[[Period], TraceFile],
        workload_source: Callable[[int], Workload],
        workers: int = 1,
    ):
        self._simulator = simulator
        self._strategy_factory = strategy_factory
        self._trace_source = trace_source
        self._workload_source = workload_source
        self._workers = max(1, workers)

    def run(self, specs: Iterable[EpisodeSpec]) -> List[EpisodeResult]:
        specs = sorted(set(specs), key=EpisodeSpec.sort_key)
        # inputs are built up front so worker threads share nothing mutable
        traces = {period: self._trace_source(period) for period in sorted({spec.period for spec in specs})}
        workloads = {seed: self._workload_source(seed) for seed in sorted({spec.seed for spec in specs})}
        logger.info("Running %d episodes on %d worker(s)", len(specs), self._workers)

        def run_one(spec: EpisodeSpec) -> EpisodeResult:
            strategy = self._strategy_factory(spec.strategy)
            return self._simulator.run_episode(traces[spec.period], workloads[spec.seed], strategy, spec.seed)

        with ThreadPoolExecutor(max_workers=self._workers) as executor:
            results = list(executor.map(run_one, specs))
        logger.info("Finished %d episodes", len(results))
        return sort_results(results)


def episode_specs(periods: Iterable[Period], strategies: Iterable[str], seeds: Iterable[int]) -> List[EpisodeSpec]:
    return [EpisodeSpec(period, strategy, seed) for period in periods for strategy in strategies for seed in seeds]

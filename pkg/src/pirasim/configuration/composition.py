"""
Object graph of one experiment, built from resolved ``Settings``.

Every strategy is built fresh per episode; strategies keep session state.
"""

import re
from functools import partial
from typing import Callable

from pirasim.application import (
    EpisodeSimulator,
    ExperimentRunner,
    OracleStrategy,
    PiraController,
    ProductionBaselineStrategy,
    PurePanCdnStrategy,
    RangePlanner,
    ThroughputPredictor,
)
from pirasim.configuration.settings import Settings
from pirasim.domain import IStrategy, Period, TraceFile, Workload
from pirasim.infrastructure import TraceLink

BASE_STRATEGIES = ("pira", "production", "oracle")
_PURE = re.compile(r"^pure-(\d+)$")


def is_strategy_name(name: str) -> bool:
    return name in BASE_STRATEGIES or _PURE.match(name) is not None


def _link(settings: Settings, traces: TraceFile, offset_s: int) -> TraceLink:
    return TraceLink(traces, settings.link_config(), offset_s)


def build_simulator(settings: Settings) -> EpisodeSimulator:
    return EpisodeSimulator(
        catalog=settings.catalog(),
        params=settings.qoe_params(),
        policy=settings.preload_policy(),
        link_factory=partial(_link, settings),
        player_cap_s=settings.player_cap_s,
        probe_charged=settings.probe_charged,
    )


def build_strategy(name: str, settings: Settings) -> IStrategy:
    """
    A fresh strategy for ``name``: ``pira``, ``production``, ``oracle`` or ``pure-<id>``.

    Raises:
        ValueError: If the name is unknown or names an unconfigured pan-CDN.
    """
    catalog = settings.catalog()
    params = settings.qoe_params()
    if name == "pira":
        predictor = ThroughputPredictor(settings.predictor_config(), catalog.ids)
        return PiraController(RangePlanner(settings.planning_config(), params, catalog), predictor, params)
    if name == "production":
        predictor = ThroughputPredictor(settings.predictor_config(), catalog.ids)
        return ProductionBaselineStrategy(settings.production_config(), predictor)
    if name == "oracle":
        return OracleStrategy(RangePlanner(settings.planning_config(), params, catalog))
    match = _PURE.match(name)
    if match is not None and int(match.group(1)) in catalog:
        return PurePanCdnStrategy(int(match.group(1)))
    raise ValueError(f"Unknown strategy '{name}'")


def build_runner(
    settings: Settings,
    trace_source: Callable[[Period], TraceFile],
    workload_source: Callable[[int], Workload],
) -> ExperimentRunner:
    return ExperimentRunner(
        simulator=build_simulator(settings),
        strategy_factory=partial(build_strategy, settings=settings),
        trace_source=trace_source,
        workload_source=workload_source,
        workers=settings.workers,
    )

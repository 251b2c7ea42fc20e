from pirasim.application.episode_simulator import EpisodeSimulator, replay_check
from pirasim.application.experiment_runner import (
    EpisodeSpec,
    ExperimentRunner,
    MetricSummary,
    aggregate,
    episode_specs,
    latency_summary,
    normalize_sweep,
    summarize,
)
from pirasim.application.harmonic_mean_forecast import HarmonicMeanForecast
from pirasim.application.oracle_strategy import OracleStrategy
from pirasim.application.pira_controller import PiraController
from pirasim.application.production_baseline_strategy import ProductionBaselineStrategy
from pirasim.application.pure_pan_cdn_strategy import PurePanCdnStrategy
from pirasim.application.range_planner import RangePlanner, count_enumerated, min_range_for, prune_pan_cdns
from pirasim.application.throughput_predictor import (
    ThroughputPredictor,
    predict,
    predict_after_switch,
    probe_due,
    record_sample,
)

__all__ = [
    "record_sample",
    "predict",
    "predict_after_switch",
    "probe_due",
    "ThroughputPredictor",
    "HarmonicMeanForecast",
    "prune_pan_cdns",
    "min_range_for",
    "count_enumerated",
    "RangePlanner",
    "PiraController",
    "PurePanCdnStrategy",
    "ProductionBaselineStrategy",
    "OracleStrategy",
    "EpisodeSimulator",
    "replay_check",
    "EpisodeSpec",
    "MetricSummary",
    "ExperimentRunner",
    "summarize",
    "aggregate",
    "latency_summary",
    "normalize_sweep",
    "episode_specs",
]

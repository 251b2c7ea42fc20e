"""
pirasim: joint pan-CDN and range-duration selection for short-video streaming.

Key components:
- domain: session model, QoE and cost accounting, value objects and interfaces
- application: throughput predictor, receding-horizon planner, strategies, simulator, experiments
- infrastructure: trace and workload files, synthetic generators, trace-backed links, reports
- configuration: layered settings, logging and object-graph assembly
- api: the ``pirasim`` command line
"""

from pirasim.application import (
    EpisodeSimulator,
    ExperimentRunner,
    OracleStrategy,
    PiraController,
    ProductionBaselineStrategy,
    PurePanCdnStrategy,
    RangePlanner,
    ThroughputPredictor,
    replay_check,
)
from pirasim.domain import (
    EpisodeResult,
    MediaList,
    PanCdnCatalog,
    PlanningConfig,
    QoEParams,
    RangeDecision,
    SessionMetrics,
    TraceFile,
    VideoSpec,
    Workload,
)

__version__ = "0.1.0"
__author__ = "Jomar Júnior de Souza Pereira"
__email__ = "jomarjunior@poli.ufrj.br"

__all__ = [
    "__version__",
    "__author__",
    "__email__",
    # Domain models
    "VideoSpec",
    "MediaList",
    "PanCdnCatalog",
    "RangeDecision",
    "QoEParams",
    "PlanningConfig",
    "SessionMetrics",
    "TraceFile",
    "Workload",
    "EpisodeResult",
    # Application services
    "ThroughputPredictor",
    "RangePlanner",
    "PiraController",
    "PurePanCdnStrategy",
    "ProductionBaselineStrategy",
    "OracleStrategy",
    "EpisodeSimulator",
    "ExperimentRunner",
    "replay_check",
]

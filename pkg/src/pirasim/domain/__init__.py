from pirasim.domain.buffer_dynamics import (
    advance_buffer_current,
    advance_buffer_prefetch,
    download_time,
    prefetch_overflow_s,
    rebuffer_time,
    startup_delay,
)
from pirasim.domain.buffer_ledger import BufferLedger
from pirasim.domain.candidate_sequence import CandidateSequence
from pirasim.domain.decision_context import DecisionContext
from pirasim.domain.decision_record import DecisionRecord
from pirasim.domain.download_outcome import DownloadOutcome
from pirasim.domain.download_target import DownloadTarget
from pirasim.domain.episode_result import EpisodeResult
from pirasim.domain.event_kind import EventKind
from pirasim.domain.forecast import Forecast
from pirasim.domain.i_link_model import ILinkModel
from pirasim.domain.i_strategy import IStrategy
from pirasim.domain.i_throughput_forecast import IThroughputForecast
from pirasim.domain.link_config import LinkConfig
from pirasim.domain.media_list import MediaList
from pirasim.domain.pan_cdn_catalog import PanCdnCatalog
from pirasim.domain.pan_cdn_class import PanCdnClass
from pirasim.domain.period import Period
from pirasim.domain.plan_result import PlanResult
from pirasim.domain.plan_state import PlanState
from pirasim.domain.planning_config import PlanningConfig
from pirasim.domain.predictor_config import PredictorConfig
from pirasim.domain.preload_policy import PreloadPolicy
from pirasim.domain.production_config import ProductionConfig
from pirasim.domain.pruning_mode import PruningMode
from pirasim.domain.qoe import qoe_media_list, qoe_video, range_cost, traffic_cost, utility
from pirasim.domain.qoe_params import QoEParams
from pirasim.domain.range_bytes import RangeBytes
from pirasim.domain.range_decision import RangeDecision
from pirasim.domain.session_event import SessionEvent
from pirasim.domain.session_metrics import SessionMetrics
from pirasim.domain.session_state import SessionState
from pirasim.domain.step_kind import StepKind
from pirasim.domain.step_outcome import StepOutcome
from pirasim.domain.synth_config import SynthConfig
from pirasim.domain.throughput_history import ThroughputHistory
from pirasim.domain.throughput_sample import ThroughputSample
from pirasim.domain.throughput_trace import ThroughputTrace
from pirasim.domain.trace_file import TraceFile
from pirasim.domain.video_spec import VideoSpec
from pirasim.domain.workload import Workload
from pirasim.domain.workload_config import WorkloadConfig

__all__ = [
    "PanCdnClass",
    "PanCdnCatalog",
    "VideoSpec",
    "MediaList",
    "RangeDecision",
    "RangeBytes",
    "BufferLedger",
    "QoEParams",
    "SessionMetrics",
    "advance_buffer_current",
    "advance_buffer_prefetch",
    "download_time",
    "prefetch_overflow_s",
    "rebuffer_time",
    "startup_delay",
    "range_cost",
    "traffic_cost",
    "qoe_video",
    "qoe_media_list",
    "utility",
    "StepKind",
    "StepOutcome",
    "SessionState",
    "DownloadTarget",
    "PreloadPolicy",
    "ThroughputSample",
    "ThroughputHistory",
    "PredictorConfig",
    "Forecast",
    "PruningMode",
    "PlanningConfig",
    "PlanState",
    "CandidateSequence",
    "PlanResult",
    "ProductionConfig",
    "LinkConfig",
    "Period",
    "ThroughputTrace",
    "TraceFile",
    "SynthConfig",
    "WorkloadConfig",
    "Workload",
    "EventKind",
    "SessionEvent",
    "DecisionRecord",
    "EpisodeResult",
    "DownloadOutcome",
    "DecisionContext",
    "IThroughputForecast",
    "IStrategy",
    "ILinkModel",
]

from dataclasses import dataclass, field
from typing import Tuple

from pirasim.domain.decision_record import DecisionRecord
from pirasim.domain.media_list import MediaList
from pirasim.domain.pan_cdn_catalog import PanCdnCatalog
from pirasim.domain.period import Period
from pirasim.domain.qoe import qoe_media_list, qoe_video, utility
from pirasim.domain.qoe_params import QoEParams
from pirasim.domain.session_event import SessionEvent
from pirasim.domain.session_metrics import SessionMetrics
from pirasim.domain.step_kind import StepKind


@dataclass(frozen=True)
class EpisodeResult:
    strategy: str
    seed: int
    period: Period
    trace_id: str
    offset_s: int
    media: MediaList
    qoe_params: QoEParams
    catalog: PanCdnCatalog
    player_cap_s: float
    probe_charged: bool
    records: Tuple[DecisionRecord, ...]
    metrics: SessionMetrics
    events: Tuple[SessionEvent, ...] = ()
    # wall-clock seconds per strategy.decide call; excluded from equality
    decision_latencies_s: Tuple[float, ...] = field(default=(), compare=False)

    @property
    def duration_s(self) -> float:
        if not self.records:
            return 0.0
        last = self.records[-1]
        return last.start_s + last.elapsed_s

    @property
    def qoe(self) -> float:
        return qoe_media_list(
            qoe_video(
                self.metrics.total_rebuffer_s.get(video.id, 0.0),
                self.metrics.startup_delay_s.get(video.id, 0.0),
                self.media.watch_of(index),
                self.qoe_params,
            )
            for index, video in enumerate(self.media.videos)
        )

    @property
    def total_cost(self) -> float:
        return self.metrics.total_cost

    @property
    def utility(self) -> float:
        return utility(self.qoe, self.total_cost, self.qoe_params.gamma)

    @property
    def rebuffer_ratio(self) -> float:
        watch = self.media.total_watch_s()
        return self.metrics.rebuffer_total_s / watch if watch > 0 else 0.0

    @property
    def mean_startup_s(self) -> float:
        return self.metrics.startup_total_s / len(self.media) if len(self.media) else 0.0

    @property
    def scored_sequences(self) -> int:
        return sum(record.scored_sequences for record in self.records)

    @property
    def decisions(self) -> int:
        return sum(1 for record in self.records if record.kind != StepKind.IDLE)

    @property
    def fallbacks(self) -> int:
        return sum(1 for record in self.records if record.fallback)

    def summary(self) -> dict:
        return {
            "strategy": self.strategy,
            "seed": self.seed,
            "period": self.period.value,
            "trace_id": self.trace_id,
            "offset_s": self.offset_s,
            "videos": len(self.media),
            "duration_s": self.duration_s,
            "rebuffer_ratio": self.rebuffer_ratio,
            "mean_startup_s": self.mean_startup_s,
            "total_cost": self.total_cost,
            "qoe": self.qoe,
            "utility": self.utility,
            "decisions": self.decisions,
            "scored_sequences": self.scored_sequences,
            "fallbacks": self.fallbacks,
            "byte_shares": {str(k): v for k, v in self.metrics.byte_shares().items()},
        }

import logging

from pirasim.application.throughput_predictor import ThroughputPredictor
from pirasim.domain import (
    DecisionContext,
    DownloadOutcome,
    IStrategy,
    ProductionConfig,
    RangeDecision,
    StepKind,
    ThroughputSample,
)
from pirasim.domain.exceptions import CannotRunInfeasibleStrategyException

logger = logging.getLogger(__name__)


class ProductionBaselineStrategy(IStrategy):
    """
    Cheapest pan-CDN whose predicted throughput beats the bitrate by a margin.

    A stall switches to the emergency pan-CDN until the viewed buffer recovers.
    Re-evaluated on every range.
    """

    def __init__(self, config: ProductionConfig, predictor: ThroughputPredictor):
        self._config = config
        self._predictor = predictor
        self._emergency = False

    @property
    def name(self) -> str:
        return "production"

    @property
    def in_emergency(self) -> bool:
        return self._emergency

    def decide(self, context: DecisionContext) -> RangeDecision:
        if self._emergency and context.viewed_buffer_s >= self._config.recovery_buffer_s:
            logger.debug("Leaving emergency mode at %.2fs", context.now_s)
            self._emergency = False

        target = context.target
        video = context.media.video_at(target.video_index)
        pan_cdn_id = self._config.emergency_cdn_id
        if not self._emergency:
            candidates = [pan_cdn_id for pan_cdn_id in context.catalog.ids if video.is_cached_on(pan_cdn_id)]
            predicted = self._predictor.predictions(candidates)
            qualifying = [c for c in candidates if predicted[c] >= self._config.margin * video.bitrate_mbps]
            if qualifying:
                pan_cdn_id = context.catalog.cheapest(qualifying)

        if not video.is_cached_on(pan_cdn_id):
            raise CannotRunInfeasibleStrategyException(
                message=f"Strategy {self.name} cannot serve '{video.id}': not cached on pan-CDN{pan_cdn_id}."
            )
        range_s = video.chunk_remaining_s(context.session.downloaded_of(video.id))
        return RangeDecision(video.id, pan_cdn_id, range_s)

    def observe(self, outcome: DownloadOutcome) -> None:
        if outcome.kind != StepKind.RANGE:
            return
        self._predictor.observe(ThroughputSample(outcome.finished_at_s, outcome.realized_mbps, outcome.pan_cdn_id))
        if outcome.rebuffer_s > 0 and not self._emergency:
            logger.debug("Entering emergency mode after a %.3fs stall", outcome.rebuffer_s)
            self._emergency = True

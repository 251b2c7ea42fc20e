import logging

from pirasim.application.harmonic_mean_forecast import HarmonicMeanForecast
from pirasim.application.range_planner import RangePlanner
from pirasim.application.throughput_predictor import ThroughputPredictor
from pirasim.domain import (
    DecisionContext,
    DownloadOutcome,
    IStrategy,
    PlanResult,
    PlanState,
    QoEParams,
    RangeDecision,
    ThroughputSample,
)

logger = logging.getLogger(__name__)


class PiraController(IStrategy):
    """
    Joint pan-CDN and range-duration selection by receding-horizon planning.

    Each decision refreshes the download sequence, probes stale pan-CDNs when the
    buffer is safe, freezes one harmonic-mean forecast per pan-CDN and plans.
    """

    def __init__(self, planner: RangePlanner, predictor: ThroughputPredictor, params: QoEParams):
        self._planner = planner
        self._predictor = predictor
        self._params = params
        self._last_plan: PlanResult | None = None
        self._viewing_index: int | None = None

    @property
    def name(self) -> str:
        return "pira"

    @property
    def last_plan(self) -> PlanResult | None:
        return self._last_plan

    @property
    def predictor(self) -> ThroughputPredictor:
        return self._predictor

    def decide(self, context: DecisionContext) -> RangeDecision:
        """
        Choose the next request for the session in ``context``.

        Args:
            context: Session snapshot and the current download sequence.

        Returns:
            RangeDecision: a probe of the stalest pan-CDN, or the planned range.
        """
        # Step 1: a swipe retargets the download sequence
        if self._viewing_index != context.session.viewing_index:
            if self._viewing_index is not None:
                logger.debug("Download sequence refreshed after swipe to entry %d", context.session.viewing_index)
            self._viewing_index = context.session.viewing_index

        # Step 2: probe while the viewed buffer is safely above the startup threshold
        probe = self._probe_if_due(context)
        if probe is not None:
            self._last_plan = None
            return probe

        # Step 3: freeze the forecast and plan
        predicted = self._predictor.predictions(context.catalog.ids)
        forecast = HarmonicMeanForecast(predicted, self._predictor.config)
        state = PlanState(context.session, context.download_sequence, predicted)
        self._last_plan = self._planner.plan(state, context.media, forecast)
        return self._last_plan.decision

    def _probe_if_due(self, context: DecisionContext) -> RangeDecision | None:
        if not context.session.started or context.viewed_buffer_s <= self._params.tau_st_s:
            return None
        due = self._predictor.probes_due(context.now_s)
        if not due:
            return None
        pan_cdn_id = self._predictor.stalest(due)
        logger.debug("Probing pan-CDN%d at %.2fs", pan_cdn_id, context.now_s)
        return RangeDecision(
            video_id=context.session.viewed_id(context.media),
            pan_cdn_id=pan_cdn_id,
            range_duration_s=self._predictor.config.probe_duration_s,
            is_probe=True,
        )

    def observe(self, outcome: DownloadOutcome) -> None:
        self._predictor.observe(ThroughputSample(outcome.finished_at_s, outcome.realized_mbps, outcome.pan_cdn_id))

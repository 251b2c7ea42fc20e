from pirasim.application.range_planner import RangePlanner
from pirasim.domain import DecisionContext, DownloadOutcome, IStrategy, PlanResult, PlanState, RangeDecision
from pirasim.domain.exceptions import CannotRunInfeasibleStrategyException


class OracleStrategy(IStrategy):
    """The planner fed with ground-truth throughput of the simulated links instead of predictions."""

    def __init__(self, planner: RangePlanner):
        self._planner = planner
        self._last_plan: PlanResult | None = None

    @property
    def name(self) -> str:
        return "oracle"

    @property
    def planner(self) -> RangePlanner:
        return self._planner

    @property
    def last_plan(self) -> PlanResult | None:
        return self._last_plan

    def decide(self, context: DecisionContext) -> RangeDecision:
        if context.ground_truth is None:
            raise CannotRunInfeasibleStrategyException(message="The oracle needs the simulator's ground truth.")
        video = context.media.video_at(context.target.video_index)
        size = video.size_megabits(video.effective_chunk_s)
        predicted = {
            pan_cdn_id: context.ground_truth.average_mbps(pan_cdn_id, context.now_s, size)
            for pan_cdn_id in context.catalog.ids
        }
        state = PlanState(context.session, context.download_sequence, predicted)
        self._last_plan = self._planner.plan(state, context.media, context.ground_truth)
        return self._last_plan.decision

    def observe(self, outcome: DownloadOutcome) -> None:
        pass

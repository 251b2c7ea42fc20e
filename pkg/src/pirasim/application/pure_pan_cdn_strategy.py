from pirasim.domain import DecisionContext, DownloadOutcome, IStrategy, RangeDecision
from pirasim.domain.exceptions import CannotRunInfeasibleStrategyException


class PurePanCdnStrategy(IStrategy):
    """Exclusive use of one pan-CDN with full-chunk ranges."""

    def __init__(self, pan_cdn_id: int):
        self._pan_cdn_id = pan_cdn_id

    @property
    def name(self) -> str:
        return f"pure-{self._pan_cdn_id}"

    @property
    def pan_cdn_id(self) -> int:
        return self._pan_cdn_id

    def decide(self, context: DecisionContext) -> RangeDecision:
        target = context.target
        video = context.media.video_at(target.video_index)
        if not video.is_cached_on(self._pan_cdn_id):
            raise CannotRunInfeasibleStrategyException(
                message=f"Strategy {self.name} cannot serve '{video.id}': not cached on pan-CDN{self._pan_cdn_id}."
            )
        range_s = video.chunk_remaining_s(context.session.downloaded_of(video.id))
        return RangeDecision(video.id, self._pan_cdn_id, range_s)

    def observe(self, outcome: DownloadOutcome) -> None:
        pass

from dataclasses import dataclass

from pirasim.domain.exceptions import (
    CannotCreateRangeDecisionExceedingChunkDurationException,
    CannotCreateRangeDecisionForUncachedPanCdnException,
    CannotCreateRangeDecisionWithNonPositiveRangeException,
)
from pirasim.domain.numeric import EPSILON
from pirasim.domain.video_spec import VideoSpec


@dataclass(frozen=True)
class RangeDecision:
    """One request: ``range_duration_s`` seconds of ``video_id`` from ``pan_cdn_id``.

    A probe is a throughput measurement against ``pan_cdn_id``; its bytes never
    enter the player buffer.
    """

    video_id: str
    pan_cdn_id: int
    range_duration_s: float
    is_probe: bool = False

    def __post_init__(self):
        if self.range_duration_s <= 0:
            raise CannotCreateRangeDecisionWithNonPositiveRangeException()

    def validate_for(self, video: VideoSpec) -> None:
        """Raise unless the decision is servable for ``video``."""
        if self.is_probe:
            return
        if self.range_duration_s > video.effective_chunk_s + EPSILON:
            raise CannotCreateRangeDecisionExceedingChunkDurationException(
                message=(
                    f"Range of {self.range_duration_s}s exceeds the {video.effective_chunk_s}s chunk of '{video.id}'."
                )
            )
        if not video.is_cached_on(self.pan_cdn_id):
            raise CannotCreateRangeDecisionForUncachedPanCdnException(
                message=f"Video '{video.id}' is not cached on pan-CDN{self.pan_cdn_id}."
            )

    def with_range(self, range_duration_s: float) -> "RangeDecision":
        return RangeDecision(self.video_id, self.pan_cdn_id, range_duration_s, self.is_probe)

    def to_dict(self) -> dict:
        return {
            "video_id": self.video_id,
            "pan_cdn_id": self.pan_cdn_id,
            "range_duration_s": self.range_duration_s,
            "is_probe": self.is_probe,
        }

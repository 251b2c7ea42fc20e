from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping

from pirasim.domain.numeric import EPSILON


@dataclass(frozen=True)
class SessionMetrics:
    """Per-video stall and startup totals plus the traffic bill of one session."""

    total_rebuffer_s: Mapping[str, float] = field(default_factory=dict)
    startup_delay_s: Mapping[str, float] = field(default_factory=dict)
    rebuffer_count: Mapping[str, int] = field(default_factory=dict)
    megabits_by_cdn: Mapping[int, float] = field(default_factory=dict)
    total_cost: float = 0.0

    @classmethod
    def empty(cls, video_ids: Iterable[str]) -> "SessionMetrics":
        video_ids = list(video_ids)
        return cls(
            total_rebuffer_s={video_id: 0.0 for video_id in video_ids},
            startup_delay_s={video_id: 0.0 for video_id in video_ids},
            rebuffer_count={video_id: 0 for video_id in video_ids},
        )

    def record(
        self,
        viewed_video_id: str,
        rebuffer_s: float,
        startup_delay_s: float,
        pan_cdn_id: int | None = None,
        size_megabits: float = 0.0,
        cost: float = 0.0,
    ) -> "SessionMetrics":
        """Add one step; stall and startup belong to the video being viewed."""
        rebuffer = dict(self.total_rebuffer_s)
        startup = dict(self.startup_delay_s)
        count = dict(self.rebuffer_count)
        megabits = dict(self.megabits_by_cdn)

        rebuffer[viewed_video_id] = rebuffer.get(viewed_video_id, 0.0) + rebuffer_s
        startup[viewed_video_id] = startup.get(viewed_video_id, 0.0) + startup_delay_s
        count[viewed_video_id] = count.get(viewed_video_id, 0) + (1 if rebuffer_s > EPSILON else 0)
        if pan_cdn_id is not None and size_megabits > 0:
            megabits[pan_cdn_id] = megabits.get(pan_cdn_id, 0.0) + size_megabits

        return SessionMetrics(rebuffer, startup, count, megabits, self.total_cost + cost)

    @property
    def rebuffer_total_s(self) -> float:
        return sum(self.total_rebuffer_s.values())

    @property
    def startup_total_s(self) -> float:
        return sum(self.startup_delay_s.values())

    @property
    def megabits_total(self) -> float:
        return sum(self.megabits_by_cdn.values())

    def byte_shares(self) -> Dict[int, float]:
        total = self.megabits_total
        if total <= 0:
            return {}
        return {pan_cdn_id: megabits / total for pan_cdn_id, megabits in sorted(self.megabits_by_cdn.items())}

    def to_dict(self) -> dict:
        return {
            "total_rebuffer_s": dict(self.total_rebuffer_s),
            "startup_delay_s": dict(self.startup_delay_s),
            "rebuffer_count": dict(self.rebuffer_count),
            "megabits_by_cdn": {
                str(pan_cdn_id): megabits for pan_cdn_id, megabits in sorted(self.megabits_by_cdn.items())
            },
            "total_cost": self.total_cost,
        }

import math
from dataclasses import dataclass, field
from typing import AbstractSet

from pirasim.domain.exceptions import (
    CannotCreateVideoSpecWithEmptyCacheSetException,
    CannotCreateVideoSpecWithNonPositiveBitrateException,
    CannotCreateVideoSpecWithNonPositiveChunkDurationException,
    CannotCreateVideoSpecWithNonPositiveDurationException,
)
from pirasim.domain.numeric import EPSILON

DEFAULT_CHUNK_DURATION_S = 4.0


@dataclass(frozen=True)
class VideoSpec:
    id: str
    duration_s: float
    bitrate_mbps: float
    chunk_duration_s: float = DEFAULT_CHUNK_DURATION_S
    cached_on: AbstractSet[int] = field(default_factory=lambda: frozenset({1}))

    def __post_init__(self):
        if self.duration_s <= 0:
            raise CannotCreateVideoSpecWithNonPositiveDurationException()
        if self.bitrate_mbps <= 0:
            raise CannotCreateVideoSpecWithNonPositiveBitrateException()
        if self.chunk_duration_s <= 0:
            raise CannotCreateVideoSpecWithNonPositiveChunkDurationException()
        if not self.cached_on:
            raise CannotCreateVideoSpecWithEmptyCacheSetException()
        object.__setattr__(self, "cached_on", frozenset(self.cached_on))

    @property
    def effective_chunk_s(self) -> float:
        """Chunk length actually used; a video shorter than one chunk is a single chunk."""
        return min(self.chunk_duration_s, self.duration_s)

    def is_cached_on(self, pan_cdn_id: int) -> bool:
        return pan_cdn_id in self.cached_on

    def size_megabits(self, range_duration_s: float) -> float:
        return self.bitrate_mbps * range_duration_s

    def content_remaining_s(self, downloaded_s: float) -> float:
        remaining = self.duration_s - downloaded_s
        return remaining if remaining > EPSILON else 0.0

    def chunk_remaining_s(self, downloaded_s: float) -> float:
        """Seconds left in the chunk that starts at or contains ``downloaded_s``."""
        if self.content_remaining_s(downloaded_s) == 0.0:
            return 0.0
        chunk = self.effective_chunk_s
        index = math.floor((downloaded_s + EPSILON) / chunk)
        return min((index + 1) * chunk, self.duration_s) - downloaded_s

    def is_complete(self, downloaded_s: float) -> bool:
        return self.content_remaining_s(downloaded_s) == 0.0

    @classmethod
    def from_dict(cls, data: dict) -> "VideoSpec":
        return cls(
            id=str(data["id"]),
            duration_s=float(data["duration_s"]),
            bitrate_mbps=float(data["bitrate_mbps"]),
            chunk_duration_s=float(data.get("chunk_duration_s", DEFAULT_CHUNK_DURATION_S)),
            cached_on=frozenset(int(pan_cdn_id) for pan_cdn_id in data["cached_on"]),
        )

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "duration_s": self.duration_s,
            "bitrate_mbps": self.bitrate_mbps,
            "chunk_duration_s": self.chunk_duration_s,
            "cached_on": sorted(self.cached_on),
        }

from dataclasses import dataclass, field
from typing import Mapping, Tuple

from pirasim.domain.exceptions import CannotCreateWorkloadConfigWithInvalidFieldsException


@dataclass(frozen=True)
class WorkloadConfig:
    video_count: int = 40
    short_fraction: float = 0.73
    short_range_s: Tuple[float, float] = (5.0, 30.0)
    long_range_s: Tuple[float, float] = (30.0, 120.0)
    bitrates_mbps: Tuple[float, ...] = (2.0, 4.0, 8.0)
    watch_median_s: float = 9.0
    watch_sigma: float = 0.8
    # the most expensive pan-CDN (the lowest id) always holds every video
    cache_probability: Mapping[int, float] = field(default_factory=lambda: {1: 1.0, 2: 1.0, 3: 1.0, 4: 1.0})
    chunk_duration_s: float = 4.0
    seed: int = 0

    def __post_init__(self):
        if self.video_count < 0:
            raise CannotCreateWorkloadConfigWithInvalidFieldsException(message="video_count must be nonnegative.")
        if not 0 <= self.short_fraction <= 1:
            raise CannotCreateWorkloadConfigWithInvalidFieldsException(message="short_fraction must be in [0, 1].")
        for low, high in (self.short_range_s, self.long_range_s):
            if not 0 < low <= high:
                raise CannotCreateWorkloadConfigWithInvalidFieldsException(message="Durations must be positive ranges.")
        if not self.bitrates_mbps or any(bitrate <= 0 for bitrate in self.bitrates_mbps):
            raise CannotCreateWorkloadConfigWithInvalidFieldsException(message="Bitrates must be positive.")
        if self.watch_median_s <= 0 or self.watch_sigma < 0:
            raise CannotCreateWorkloadConfigWithInvalidFieldsException(message="Invalid watch-duration model.")
        if not self.cache_probability or any(not 0 <= p <= 1 for p in self.cache_probability.values()):
            raise CannotCreateWorkloadConfigWithInvalidFieldsException(message="Cache probabilities must be in [0, 1].")
        if self.chunk_duration_s <= 0:
            raise CannotCreateWorkloadConfigWithInvalidFieldsException(message="chunk_duration_s must be positive.")

    @property
    def pan_cdn_ids(self) -> Tuple[int, ...]:
        return tuple(sorted(self.cache_probability))

    def to_dict(self) -> dict:
        return {
            "video_count": self.video_count,
            "short_fraction": self.short_fraction,
            "short_range_s": list(self.short_range_s),
            "long_range_s": list(self.long_range_s),
            "bitrates_mbps": list(self.bitrates_mbps),
            "watch_median_s": self.watch_median_s,
            "watch_sigma": self.watch_sigma,
            "cache_probability": {str(k): v for k, v in sorted(self.cache_probability.items())},
            "chunk_duration_s": self.chunk_duration_s,
            "seed": self.seed,
        }

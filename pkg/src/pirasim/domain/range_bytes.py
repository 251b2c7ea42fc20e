from dataclasses import dataclass

from pirasim.domain.video_spec import VideoSpec


@dataclass(frozen=True)
class RangeBytes:
    """Size of a range in megabits; constant bitrate, so bitrate × range duration."""

    size_megabits: float

    @classmethod
    def for_range(cls, video: VideoSpec, range_duration_s: float) -> "RangeBytes":
        return cls(size_megabits=video.size_megabits(range_duration_s))

    @property
    def size_megabytes(self) -> float:
        return self.size_megabits / 8.0

from dataclasses import dataclass
from typing import Sequence, Tuple

from pirasim.domain.exceptions import CannotCreateThroughputTraceWithInvalidSamplesException


@dataclass(frozen=True)
class ThroughputTrace:
    """Piecewise-constant throughput of one pan-CDN: ``mbps[k]`` holds over [k, k+1) seconds."""

    pan_cdn_id: int
    mbps: Tuple[float, ...]

    def __post_init__(self):
        if not self.mbps:
            raise CannotCreateThroughputTraceWithInvalidSamplesException(
                message=f"Trace of pan-CDN{self.pan_cdn_id} has no samples."
            )
        if any(value <= 0 for value in self.mbps):
            raise CannotCreateThroughputTraceWithInvalidSamplesException(
                message=f"Trace of pan-CDN{self.pan_cdn_id} has nonpositive throughput."
            )
        object.__setattr__(self, "mbps", tuple(float(value) for value in self.mbps))

    @classmethod
    def constant(cls, pan_cdn_id: int, mbps: float, length_s: int) -> "ThroughputTrace":
        return cls(pan_cdn_id, tuple([mbps] * length_s))

    @classmethod
    def of(cls, pan_cdn_id: int, mbps: Sequence[float]) -> "ThroughputTrace":
        return cls(pan_cdn_id, tuple(mbps))

    @property
    def length_s(self) -> int:
        return len(self.mbps)

    @property
    def mean_mbps(self) -> float:
        return sum(self.mbps) / len(self.mbps)

from dataclasses import dataclass

from pirasim.domain.exceptions import CannotCreateThroughputSampleWithNonPositiveRateException


@dataclass(frozen=True)
class ThroughputSample:
    at_s: float
    mbps: float
    pan_cdn_id: int

    def __post_init__(self):
        if self.mbps <= 0:
            raise CannotCreateThroughputSampleWithNonPositiveRateException()

from abc import abstractmethod
from typing import Tuple

from pirasim.domain.i_throughput_forecast import IThroughputForecast
from pirasim.domain.range_decision import RangeDecision


class ILinkModel(IThroughputForecast):
    """The emulated pan-CDN links of one episode, in episode-relative seconds."""

    @abstractmethod
    def is_pooled(self, pan_cdn_id: int, at_s: float) -> bool:
        """Whether a warm connection to ``pan_cdn_id`` is available at ``at_s``."""

    @abstractmethod
    def download_range(
        self, decision: RangeDecision, size_megabits: float, start_s: float, pooled: bool
    ) -> Tuple[float, float]:
        """Transfer ``size_megabits`` and return the finish time and realised average throughput."""

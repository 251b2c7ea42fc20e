from abc import ABC, abstractmethod
from typing import Tuple


class IThroughputForecast(ABC):
    @abstractmethod
    def average_mbps(self, pan_cdn_id: int, start_s: float, size_megabits: float) -> float:
        """Average throughput expected for a download of ``size_megabits`` starting at ``start_s``."""

    @abstractmethod
    def switch_penalty(self, from_id: int | None, to_id: int, at_s: float) -> Tuple[float, float]:
        """Throughput factor and extra setup seconds for a request to ``to_id`` after ``from_id``."""

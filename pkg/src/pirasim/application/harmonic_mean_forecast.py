from typing import Mapping, Tuple

from pirasim.domain import IThroughputForecast, PredictorConfig


class HarmonicMeanForecast(IThroughputForecast):
    """One frozen prediction per pan-CDN for the whole planning epoch."""

    def __init__(self, predicted_mbps: Mapping[int, float], config: PredictorConfig):
        self._predicted = dict(predicted_mbps)
        self._config = config

    def average_mbps(self, pan_cdn_id: int, start_s: float, size_megabits: float) -> float:
        return self._predicted[pan_cdn_id]

    def switch_penalty(self, from_id: int | None, to_id: int, at_s: float) -> Tuple[float, float]:
        # a first request has no warm connection yet, so it pays setup too
        if from_id == to_id:
            return 1.0, 0.0
        return self._config.degradation_alpha, self._config.switch_setup_s

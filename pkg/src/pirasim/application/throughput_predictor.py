"""
Harmonic-mean throughput prediction per pan-CDN.

Module functions are the pure operations; ``ThroughputPredictor`` is the stateful
service a strategy owns for one session.
"""

import logging
import statistics
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple

from pirasim.domain import Forecast, PredictorConfig, ThroughputHistory, ThroughputSample
from pirasim.domain.exceptions import (
    CannotPredictSwitchToSamePanCdnException,
    CannotPredictThroughputWithoutSamplesException,
)

logger = logging.getLogger(__name__)


def record_sample(history: ThroughputHistory, sample: ThroughputSample) -> ThroughputHistory:
    return history.record(sample)


def predict(history: ThroughputHistory, pan_cdn_id: int) -> float:
    """
    Harmonic mean of the windowed samples of ``pan_cdn_id``.

    Raises:
        CannotPredictThroughputWithoutSamplesException: If the pan-CDN has no samples.
    """
    window = history.samples_for(pan_cdn_id)
    if not window:
        raise CannotPredictThroughputWithoutSamplesException(
            message=f"No throughput samples for pan-CDN{pan_cdn_id}."
        )
    return statistics.harmonic_mean([sample.mbps for sample in window])


def predict_after_switch(
    history: ThroughputHistory, from_id: int, to_id: int, config: PredictorConfig
) -> Tuple[float, float]:
    """
    Throughput of the first range after moving from ``from_id`` to ``to_id``.

    Returns:
        Tuple[float, float]: degraded throughput and the connection setup seconds.

    Raises:
        CannotPredictSwitchToSamePanCdnException: If both ids are equal.
        CannotPredictThroughputWithoutSamplesException: If ``to_id`` has no samples.
    """
    if from_id == to_id:
        raise CannotPredictSwitchToSamePanCdnException()
    return config.degradation_alpha * predict(history, to_id), config.switch_setup_s


def probe_due(
    last_probe_s: Mapping[int, float], now_s: float, config: PredictorConfig, pan_cdn_ids: Iterable[int]
) -> FrozenSet[int]:
    """Pan-CDNs not measured for longer than the probe interval; never measured counts as stale."""
    return frozenset(
        pan_cdn_id
        for pan_cdn_id in pan_cdn_ids
        if pan_cdn_id not in last_probe_s or now_s - last_probe_s[pan_cdn_id] > config.probe_interval_s
    )


class ThroughputPredictor:
    """Per-session throughput knowledge: sample windows, probe clock and priors."""

    def __init__(self, config: PredictorConfig, pan_cdn_ids: Iterable[int]):
        self._config = config
        self._pan_cdn_ids = tuple(sorted(pan_cdn_ids))
        self._history = ThroughputHistory(config.window_w)
        self._last_measured_s: Dict[int, float] = {}
        self._warned_priors: set = set()

    @property
    def config(self) -> PredictorConfig:
        return self._config

    @property
    def history(self) -> ThroughputHistory:
        return self._history

    @property
    def pan_cdn_ids(self) -> Tuple[int, ...]:
        return self._pan_cdn_ids

    def observe(self, sample: ThroughputSample) -> None:
        self._history = record_sample(self._history, sample)
        self._last_measured_s[sample.pan_cdn_id] = sample.at_s

    def forecast(self, pan_cdn_id: int) -> Forecast:
        try:
            return Forecast(pan_cdn_id, predict(self._history, pan_cdn_id))
        except CannotPredictThroughputWithoutSamplesException:
            prior = self._config.prior_mbps.get(pan_cdn_id)
            if prior is None:
                raise
            if pan_cdn_id not in self._warned_priors:
                self._warned_priors.add(pan_cdn_id)
                logger.debug("Using cold-start prior of %.1f Mbps for pan-CDN%d", prior, pan_cdn_id)
            return Forecast(pan_cdn_id, prior, low_confidence=True)

    def predictions(self, pan_cdn_ids: Iterable[int] | None = None) -> Dict[int, float]:
        ids = self._pan_cdn_ids if pan_cdn_ids is None else pan_cdn_ids
        return {pan_cdn_id: self.forecast(pan_cdn_id).mbps for pan_cdn_id in ids}

    def probes_due(self, now_s: float) -> FrozenSet[int]:
        return probe_due(self._last_measured_s, now_s, self._config, self._pan_cdn_ids)

    def stalest(self, pan_cdn_ids: Iterable[int]) -> int:
        """The id measured longest ago; never-measured ids first, then lower id."""
        return min(
            pan_cdn_ids, key=lambda pan_cdn_id: (self._last_measured_s.get(pan_cdn_id, float("-inf")), pan_cdn_id)
        )

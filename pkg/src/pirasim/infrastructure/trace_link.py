"""Pan-CDN links emulated from piecewise-constant throughput traces."""

import math
from typing import Dict, Tuple

import numpy as np

from pirasim.domain import ILinkModel, LinkConfig, RangeDecision, TraceFile
from pirasim.domain.exceptions import CannotDownloadRangeBeyondTraceException


class TraceLink(ILinkModel):
    """
    Links of one episode, reading the traces from ``offset_s`` onward.

    Each pan-CDN keeps one pooled connection; a request that finds no warm
    connection pays the setup latency and runs at ``degradation_alpha`` of the
    trace for that range.
    """

    def __init__(self, traces: TraceFile, config: LinkConfig, offset_s: int = 0):
        if not 0 <= offset_s < traces.length_s:
            raise CannotDownloadRangeBeyondTraceException(
                message=f"Offset {offset_s}s lies outside the {traces.length_s}s trace '{traces.trace_id}'."
            )
        self._config = config
        self._offset_s = offset_s
        self._rates: Dict[int, np.ndarray] = {}
        self._cumulative: Dict[int, np.ndarray] = {}
        for pan_cdn_id, trace in traces.traces.items():
            rates = np.asarray(trace.mbps[offset_s:], dtype=np.float64)
            self._rates[pan_cdn_id] = rates
            self._cumulative[pan_cdn_id] = np.concatenate(([0.0], np.cumsum(rates)))
        self._last_use_s: Dict[int, float] = {}

    @property
    def offset_s(self) -> int:
        return self._offset_s

    @property
    def config(self) -> LinkConfig:
        return self._config

    def _finish_time(self, pan_cdn_id: int, transfer_start_s: float, megabits: float) -> float:
        """When ``megabits`` started at ``transfer_start_s`` have arrived at full trace rate."""
        try:
            rates = self._rates[pan_cdn_id]
            cumulative = self._cumulative[pan_cdn_id]
        except KeyError as e:
            raise CannotDownloadRangeBeyondTraceException(message=f"No trace for pan-CDN{pan_cdn_id}.") from e
        length = len(rates)
        if transfer_start_s >= length:
            raise CannotDownloadRangeBeyondTraceException()

        second = int(math.floor(transfer_start_s))
        arrived_before = cumulative[second] + (transfer_start_s - second) * rates[second]
        goal = arrived_before + megabits
        if goal > cumulative[-1]:
            raise CannotDownloadRangeBeyondTraceException(
                message=(
                    f"Trace of pan-CDN{pan_cdn_id} ends before {megabits:.3f} Mb "
                    f"from {transfer_start_s:.3f}s arrive."
                )
            )
        segment = int(np.searchsorted(cumulative, goal, side="right")) - 1
        if segment >= length:
            return float(length)
        return float(segment + (goal - cumulative[segment]) / rates[segment])

    def is_pooled(self, pan_cdn_id: int, at_s: float) -> bool:
        last_use = self._last_use_s.get(pan_cdn_id)
        return last_use is not None and at_s - last_use <= self._config.pool_idle_timeout_s

    def download_range(
        self, decision: RangeDecision, size_megabits: float, start_s: float, pooled: bool
    ) -> Tuple[float, float]:
        """
        Transfer a range and keep its connection warm.

        Returns:
            Tuple[float, float]: finish time and ``size_megabits / (finish - start)``.

        Raises:
            CannotDownloadRangeBeyondTraceException: If the trace ends first.
        """
        factor, setup_s = (1.0, 0.0) if pooled else (self._config.degradation_alpha, self._config.setup_s)
        finish_s = self._finish_time(decision.pan_cdn_id, start_s + setup_s, size_megabits / factor)
        self._last_use_s[decision.pan_cdn_id] = finish_s
        return finish_s, float(size_megabits / (finish_s - start_s))

    def average_mbps(self, pan_cdn_id: int, start_s: float, size_megabits: float) -> float:
        try:
            finish_s = self._finish_time(pan_cdn_id, start_s, size_megabits)
        except CannotDownloadRangeBeyondTraceException:
            if pan_cdn_id not in self._rates:
                raise
            return float(self._rates[pan_cdn_id][-1])
        return float(size_megabits / (finish_s - start_s))

    def switch_penalty(self, from_id: int | None, to_id: int, at_s: float) -> Tuple[float, float]:
        if from_id == to_id or self.is_pooled(to_id, at_s):
            return 1.0, 0.0
        return self._config.degradation_alpha, self._config.setup_s

from typing import Any, Dict, Iterable, Mapping, Tuple

from pirasim.domain.exceptions import CannotCreateThroughputTraceWithInvalidSamplesException
from pirasim.domain.period import Period
from pirasim.domain.throughput_trace import ThroughputTrace


class TraceFile:
    """Aligned per-pan-CDN throughput traces of one period."""

    def __init__(self, trace_id: str, period: Period, traces: Iterable[ThroughputTrace]):
        traces = sorted(traces, key=lambda trace: trace.pan_cdn_id)
        if not traces:
            raise CannotCreateThroughputTraceWithInvalidSamplesException(
                message="A trace file needs at least one trace."
            )
        ids = [trace.pan_cdn_id for trace in traces]
        if len(set(ids)) != len(ids):
            raise CannotCreateThroughputTraceWithInvalidSamplesException(message="Duplicate pan-CDN traces.")
        if len({trace.length_s for trace in traces}) != 1:
            raise CannotCreateThroughputTraceWithInvalidSamplesException(
                message="Traces of one file must cover the same seconds."
            )

        self._trace_id = trace_id
        self._period = Period(period)
        self._traces: Dict[int, ThroughputTrace] = {trace.pan_cdn_id: trace for trace in traces}

    @property
    def trace_id(self) -> str:
        return self._trace_id

    @property
    def period(self) -> Period:
        return self._period

    @property
    def traces(self) -> Mapping[int, ThroughputTrace]:
        return dict(self._traces)

    @property
    def pan_cdn_ids(self) -> Tuple[int, ...]:
        return tuple(self._traces)

    @property
    def length_s(self) -> int:
        return next(iter(self._traces.values())).length_s

    def trace_of(self, pan_cdn_id: int) -> ThroughputTrace:
        return self._traces[pan_cdn_id]

    def __len__(self) -> int:
        return sum(trace.length_s for trace in self._traces.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "trace_id": self._trace_id,
            "period": self._period.value,
            "pan_cdn_ids": list(self._traces),
            "length_s": self.length_s,
        }

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TraceFile):
            return False
        return self._trace_id == other._trace_id and self._period == other._period and self._traces == other._traces

    def __repr__(self) -> str:
        return f"TraceFile(trace_id={self._trace_id!r}, period={self._period}, pan_cdn_ids={list(self._traces)})"

from types import MappingProxyType
from typing import Dict, Mapping, Tuple

from pirasim.domain.exceptions import CannotRecordThroughputSampleOutOfOrderException
from pirasim.domain.throughput_sample import ThroughputSample

DEFAULT_WINDOW = 5


class ThroughputHistory:
    """Per pan-CDN window of the most recent samples, oldest first."""

    def __init__(
        self, window_w: int = DEFAULT_WINDOW, samples: Mapping[int, Tuple[ThroughputSample, ...]] | None = None
    ):
        if window_w < 1:
            raise ValueError("window_w must be a positive integer")
        self._window_w = window_w
        self._samples: Dict[int, Tuple[ThroughputSample, ...]] = {
            pan_cdn_id: tuple(window)[-window_w:] for pan_cdn_id, window in (samples or {}).items()
        }

    @property
    def window_w(self) -> int:
        return self._window_w

    @property
    def samples(self) -> Mapping[int, Tuple[ThroughputSample, ...]]:
        return MappingProxyType(self._samples)

    def samples_for(self, pan_cdn_id: int) -> Tuple[ThroughputSample, ...]:
        return self._samples.get(pan_cdn_id, ())

    def last_sample_at(self, pan_cdn_id: int) -> float | None:
        window = self._samples.get(pan_cdn_id)
        return window[-1].at_s if window else None

    def record(self, sample: ThroughputSample) -> "ThroughputHistory":
        window = self._samples.get(sample.pan_cdn_id, ())
        if window and sample.at_s < window[-1].at_s:
            raise CannotRecordThroughputSampleOutOfOrderException(
                message=(
                    f"Sample at {sample.at_s}s precedes the last pan-CDN{sample.pan_cdn_id} "
                    f"sample at {window[-1].at_s}s."
                )
            )
        samples = dict(self._samples)
        samples[sample.pan_cdn_id] = (window + (sample,))[-self._window_w :]
        return ThroughputHistory(self._window_w, samples)

    def __len__(self) -> int:
        return sum(len(window) for window in self._samples.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ThroughputHistory):
            return False
        return self._window_w == other._window_w and self._samples == other._samples

    def __repr__(self) -> str:
        return f"ThroughputHistory(window_w={self._window_w}, samples={self._samples})"

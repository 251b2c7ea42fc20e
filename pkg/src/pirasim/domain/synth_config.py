from dataclasses import dataclass, field
from typing import Dict, Mapping

from pirasim.domain.exceptions import CannotCreateSynthConfigWithInvalidFieldsException
from pirasim.domain.period import Period

DEFAULT_BASE_MBPS = {1: 25.0, 2: 22.0, 3: 18.0, 4: 14.0}
# pan-CDN3 falls below pan-CDN4 in the evening peak
DEFAULT_PERIOD_MULTIPLIERS = {
    Period.OFF_PEAK: {1: 1.0, 2: 1.0, 3: 1.0, 4: 1.0},
    Period.PEAK: {1: 0.9, 2: 0.85, 3: 0.8, 4: 0.8},
    Period.EVENING_PEAK: {1: 0.8, 2: 0.7, 3: 0.5, 4: 0.7},
}


@dataclass(frozen=True)
class SynthConfig:
    period: Period = Period.OFF_PEAK
    base_mbps: Mapping[int, float] = field(default_factory=lambda: dict(DEFAULT_BASE_MBPS))
    period_multipliers: Mapping[Period, Mapping[int, float]] = field(
        default_factory=lambda: {period: dict(factors) for period, factors in DEFAULT_PERIOD_MULTIPLIERS.items()}
    )
    ar_coeff: float = 0.9
    noise_sigma: float = 0.35
    length_s: int = 3600
    seed: int = 0
    trace_id: str = ""

    def __post_init__(self):
        object.__setattr__(self, "period", Period(self.period))
        if not self.base_mbps or any(mean <= 0 for mean in self.base_mbps.values()):
            raise CannotCreateSynthConfigWithInvalidFieldsException(message="Base means must be positive.")
        if not 0 <= self.ar_coeff < 1:
            raise CannotCreateSynthConfigWithInvalidFieldsException(message="ar_coeff must be in [0, 1).")
        if self.noise_sigma < 0:
            raise CannotCreateSynthConfigWithInvalidFieldsException(message="noise_sigma must be nonnegative.")
        if self.length_s < 1:
            raise CannotCreateSynthConfigWithInvalidFieldsException(message="length_s must be at least 1 second.")
        factors = self.period_multipliers.get(self.period, {})
        if any(factors.get(pan_cdn_id, 1.0) <= 0 for pan_cdn_id in self.base_mbps):
            raise CannotCreateSynthConfigWithInvalidFieldsException(message="Period multipliers must be positive.")
        if not self.trace_id:
            object.__setattr__(self, "trace_id", f"synth-{self.period.value}-{self.seed}")

    def mean_mbps(self, pan_cdn_id: int) -> float:
        return self.base_mbps[pan_cdn_id] * self.period_multipliers.get(self.period, {}).get(pan_cdn_id, 1.0)

    def means(self) -> Dict[int, float]:
        return {pan_cdn_id: self.mean_mbps(pan_cdn_id) for pan_cdn_id in sorted(self.base_mbps)}

    def to_dict(self) -> dict:
        return {
            "period": self.period.value,
            "means_mbps": {str(pan_cdn_id): mean for pan_cdn_id, mean in self.means().items()},
            "ar_coeff": self.ar_coeff,
            "noise_sigma": self.noise_sigma,
            "length_s": self.length_s,
            "seed": self.seed,
            "trace_id": self.trace_id,
        }

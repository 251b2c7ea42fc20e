from dataclasses import dataclass, field
from typing import Mapping

from pirasim.domain.exceptions import CannotCreatePredictorConfigWithInvalidFieldsException

DEFAULT_PRIOR_MBPS = {1: 25.0, 2: 22.0, 3: 18.0, 4: 14.0}


@dataclass(frozen=True)
class PredictorConfig:
    window_w: int = 5
    degradation_alpha: float = 0.8
    switch_setup_rtt_mult: float = 1.5
    avg_rtt_s: float = 0.05
    probe_interval_s: float = 30.0
    probe_duration_s: float = 0.5
    probe_charged: bool = True
    prior_mbps: Mapping[int, float] = field(default_factory=lambda: dict(DEFAULT_PRIOR_MBPS))

    def __post_init__(self):
        if self.window_w < 1:
            raise CannotCreatePredictorConfigWithInvalidFieldsException(message="window_w must be at least 1.")
        if not 0 < self.degradation_alpha <= 1:
            raise CannotCreatePredictorConfigWithInvalidFieldsException(message="degradation_alpha must be in (0, 1].")
        if self.switch_setup_rtt_mult < 0 or self.avg_rtt_s < 0:
            raise CannotCreatePredictorConfigWithInvalidFieldsException(message="Switch setup must be nonnegative.")
        if self.probe_interval_s <= 0 or self.probe_duration_s <= 0:
            raise CannotCreatePredictorConfigWithInvalidFieldsException(
                message="probe_interval_s and probe_duration_s must be positive."
            )
        if any(prior <= 0 for prior in self.prior_mbps.values()):
            raise CannotCreatePredictorConfigWithInvalidFieldsException(message="Throughput priors must be positive.")

    @property
    def switch_setup_s(self) -> float:
        return self.switch_setup_rtt_mult * self.avg_rtt_s

    def to_dict(self) -> dict:
        return {
            "window_w": self.window_w,
            "degradation_alpha": self.degradation_alpha,
            "switch_setup_rtt_mult": self.switch_setup_rtt_mult,
            "avg_rtt_s": self.avg_rtt_s,
            "probe_interval_s": self.probe_interval_s,
            "probe_duration_s": self.probe_duration_s,
            "probe_charged": self.probe_charged,
            "prior_mbps": {str(pan_cdn_id): prior for pan_cdn_id, prior in sorted(self.prior_mbps.items())},
        }

from dataclasses import dataclass


@dataclass(frozen=True)
class LinkConfig:
    """Connection model of the emulated links.

    A request without a warm pooled connection waits ``setup_s`` and runs at
    ``degradation_alpha`` of the trace for that range.
    """

    pool_idle_timeout_s: float = 180.0
    degradation_alpha: float = 0.8
    setup_s: float = 0.075

    def __post_init__(self):
        if self.pool_idle_timeout_s < 0 or self.setup_s < 0 or not 0 < self.degradation_alpha <= 1:
            raise ValueError("Invalid link configuration")

    def to_dict(self) -> dict:
        return {
            "pool_idle_timeout_s": self.pool_idle_timeout_s,
            "degradation_alpha": self.degradation_alpha,
            "setup_s": self.setup_s,
        }

from dataclasses import dataclass


@dataclass(frozen=True)
class Forecast:
    """A throughput prediction; ``low_confidence`` marks a cold-start prior."""

    pan_cdn_id: int
    mbps: float
    low_confidence: bool = False

from dataclasses import dataclass

from pirasim.domain.step_kind import StepKind


@dataclass(frozen=True)
class DownloadOutcome:
    """What a strategy learns after its request lands."""

    kind: StepKind
    pan_cdn_id: int
    finished_at_s: float
    realized_mbps: float
    rebuffer_s: float
    viewed_buffer_s: float

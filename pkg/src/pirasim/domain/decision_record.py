from dataclasses import asdict, dataclass

from pirasim.domain.step_kind import StepKind


@dataclass(frozen=True)
class DecisionRecord:
    """One line of the episode log; enough to replay the session."""

    index: int
    kind: StepKind
    start_s: float
    viewed_video_id: str
    video_id: str | None
    pan_cdn_id: int | None
    range_duration_s: float
    size_megabits: float
    realized_mbps: float
    pooled: bool
    download_time_s: float
    wait_time_s: float
    rebuffer_s: float
    startup_delay_s: float
    cost: float
    elapsed_s: float
    swiped: bool
    scored_sequences: int = 0
    fallback: bool = False

    def to_dict(self) -> dict:
        data = asdict(self)
        data["kind"] = self.kind.value
        return data

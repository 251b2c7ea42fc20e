from dataclasses import dataclass

from pirasim.domain.step_kind import StepKind


@dataclass(frozen=True)
class StepOutcome:
    kind: StepKind
    viewed_video_id: str
    video_id: str | None = None
    pan_cdn_id: int | None = None
    range_duration_s: float = 0.0
    size_megabits: float = 0.0
    download_time_s: float = 0.0
    wait_time_s: float = 0.0
    rebuffer_s: float = 0.0
    startup_delay_s: float = 0.0
    cost: float = 0.0
    # share of the downloaded video's needed content this step delivered
    content_reward: float = 0.0
    elapsed_s: float = 0.0
    playback_started: bool = False
    swiped: bool = False

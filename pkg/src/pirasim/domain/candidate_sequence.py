from dataclasses import dataclass
from typing import Tuple

from pirasim.domain.exceptions import CannotPlanWithoutDownloadTargetException


@dataclass(frozen=True)
class CandidateSequence:
    """A scored rollout: (pan_cdn_id, range_duration_s) pairs in request order."""

    actions: Tuple[Tuple[int, float], ...]
    utility: float

    def __post_init__(self):
        if not self.actions:
            raise CannotPlanWithoutDownloadTargetException(message="A candidate sequence needs at least one action.")

    @property
    def first(self) -> Tuple[int, float]:
        return self.actions[0]

    def __len__(self) -> int:
        return len(self.actions)

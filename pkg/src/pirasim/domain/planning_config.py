from dataclasses import dataclass, replace
from typing import Tuple

from pirasim.domain.exceptions import CannotCreatePlanningConfigWithInvalidFieldsException
from pirasim.domain.numeric import EPSILON
from pirasim.domain.pruning_mode import PruningMode

# (ratio threshold, minimum range): rho < 1 -> 1 s, 1 <= rho < 2 -> 2 s, 2 <= rho < 4 -> 3 s, rho >= 4 -> 4 s
DEFAULT_RANGE_RATIO_STEPS = ((0.0, 1.0), (1.0, 2.0), (2.0, 3.0), (4.0, 4.0))


@dataclass(frozen=True)
class PlanningConfig:
    horizon_n: int = 4
    candidate_ranges_s: Tuple[float, ...] = (1.0, 2.0, 3.0, 4.0)
    pruning: PruningMode = PruningMode.ON
    range_ratio_steps: Tuple[Tuple[float, float], ...] = DEFAULT_RANGE_RATIO_STEPS
    chunk_duration_s: float = 4.0

    def __post_init__(self):
        if self.horizon_n < 1:
            raise CannotCreatePlanningConfigWithInvalidFieldsException(message="horizon_n must be at least 1.")
        if not self.candidate_ranges_s:
            raise CannotCreatePlanningConfigWithInvalidFieldsException(message="candidate_ranges_s must not be empty.")
        if any(r <= 0 or r > self.chunk_duration_s + EPSILON for r in self.candidate_ranges_s):
            raise CannotCreatePlanningConfigWithInvalidFieldsException(
                message="Every candidate range must be positive and fit in one chunk."
            )
        thresholds = [threshold for threshold, _ in self.range_ratio_steps]
        minimums = [minimum for _, minimum in self.range_ratio_steps]
        if not self.range_ratio_steps:
            raise CannotCreatePlanningConfigWithInvalidFieldsException(message="range_ratio_steps must not be empty.")
        if any(later <= earlier for earlier, later in zip(thresholds, thresholds[1:])):
            raise CannotCreatePlanningConfigWithInvalidFieldsException(
                message="range_ratio_steps thresholds must be strictly increasing."
            )
        if any(later < earlier for earlier, later in zip(minimums, minimums[1:])):
            raise CannotCreatePlanningConfigWithInvalidFieldsException(
                message="range_ratio_steps minimum ranges must be nondecreasing."
            )
        object.__setattr__(self, "candidate_ranges_s", tuple(sorted(set(float(r) for r in self.candidate_ranges_s))))
        object.__setattr__(self, "pruning", PruningMode(self.pruning))

    def with_horizon(self, horizon_n: int) -> "PlanningConfig":
        return replace(self, horizon_n=horizon_n)

    def with_pruning(self, pruning: PruningMode) -> "PlanningConfig":
        return replace(self, pruning=pruning)

    def to_dict(self) -> dict:
        return {
            "horizon_n": self.horizon_n,
            "candidate_ranges_s": list(self.candidate_ranges_s),
            "pruning": self.pruning.value,
            "range_ratio_steps": [list(step) for step in self.range_ratio_steps],
            "chunk_duration_s": self.chunk_duration_s,
        }

from dataclasses import dataclass, field
from typing import FrozenSet

from pirasim.domain.candidate_sequence import CandidateSequence
from pirasim.domain.range_decision import RangeDecision


@dataclass(frozen=True)
class PlanResult:
    decision: RangeDecision
    utility: float
    scored_sequences: int
    best_sequence: CandidateSequence | None = None
    pruned_pan_cdns: FrozenSet[int] = field(default_factory=frozenset)
    fallback: bool = False

from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateRangeDecisionExceedingChunkDurationException(DomainException):
    message: str = "Cannot create a RangeDecision longer than the video's chunk duration."

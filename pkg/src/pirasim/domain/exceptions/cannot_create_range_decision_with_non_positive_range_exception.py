from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateRangeDecisionWithNonPositiveRangeException(DomainException):
    message: str = "Cannot create a RangeDecision with a non-positive range duration."

from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotComputeQoeWithNonPositiveWatchDurationException(DomainException):
    message: str = "Cannot compute the QoE of a video with a non-positive watch duration."

from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateThroughputSampleWithNonPositiveRateException(DomainException):
    message: str = "Cannot create a ThroughputSample with a non-positive rate."

from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateThroughputTraceWithInvalidSamplesException(DomainException):
    message: str = "Cannot create a ThroughputTrace with empty or non-positive samples."

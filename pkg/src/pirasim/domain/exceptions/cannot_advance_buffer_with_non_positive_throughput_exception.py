from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotAdvanceBufferWithNonPositiveThroughputException(DomainException):
    message: str = "Cannot advance a buffer with a non-positive average throughput."

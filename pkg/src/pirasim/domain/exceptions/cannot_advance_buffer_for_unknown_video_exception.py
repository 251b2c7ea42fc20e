from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotAdvanceBufferForUnknownVideoException(DomainException):
    message: str = "Cannot advance the buffer of a video that is not in the ledger."

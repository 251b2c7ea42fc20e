from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateBufferLedgerWithNegativeBufferException(DomainException):
    message: str = "Cannot create a BufferLedger with a negative buffer entry."

from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateBufferLedgerWithNonPositiveCapException(DomainException):
    message: str = "Cannot create a BufferLedger with a non-positive player buffer cap."

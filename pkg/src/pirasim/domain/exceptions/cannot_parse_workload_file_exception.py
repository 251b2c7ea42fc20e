from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotParseWorkloadFileException(DomainException):
    message: str = "Cannot parse the workload file."

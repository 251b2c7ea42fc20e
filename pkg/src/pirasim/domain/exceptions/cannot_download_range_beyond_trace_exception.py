from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotDownloadRangeBeyondTraceException(DomainException):
    message: str = "Cannot download a range past the end of the throughput trace."

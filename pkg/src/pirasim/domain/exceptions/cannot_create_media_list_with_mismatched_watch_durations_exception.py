from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateMediaListWithMismatchedWatchDurationsException(DomainException):
    message: str = "Cannot create a MediaList whose watch durations do not match its videos."

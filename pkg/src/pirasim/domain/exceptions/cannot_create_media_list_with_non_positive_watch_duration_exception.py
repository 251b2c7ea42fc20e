from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateMediaListWithNonPositiveWatchDurationException(DomainException):
    message: str = "Cannot create a MediaList with a non-positive watch duration."

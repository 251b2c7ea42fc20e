from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotAdvancePrefetchForViewedVideoException(DomainException):
    message: str = "Cannot advance a prefetch buffer for the video being viewed."

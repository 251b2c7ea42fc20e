from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateVideoSpecWithEmptyCacheSetException(DomainException):
    message: str = "Cannot create a VideoSpec that is not cached on any pan-CDN."

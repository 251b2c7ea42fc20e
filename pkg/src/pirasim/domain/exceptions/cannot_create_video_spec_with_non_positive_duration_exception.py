from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateVideoSpecWithNonPositiveDurationException(DomainException):
    message: str = "Cannot create a VideoSpec with a non-positive duration."

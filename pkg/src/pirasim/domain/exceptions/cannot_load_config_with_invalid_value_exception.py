from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotLoadConfigWithInvalidValueException(DomainException):
    message: str = "Cannot load a configuration with an invalid value."

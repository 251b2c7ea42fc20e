from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotLoadConfigWithUnknownKeyException(DomainException):
    message: str = "Cannot load a configuration with an unknown key."

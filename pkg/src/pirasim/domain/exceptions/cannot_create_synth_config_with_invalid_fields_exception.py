from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateSynthConfigWithInvalidFieldsException(DomainException):
    message: str = "Cannot create a SynthConfig with invalid fields."

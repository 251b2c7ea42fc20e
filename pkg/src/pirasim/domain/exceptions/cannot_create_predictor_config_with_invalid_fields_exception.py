from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreatePredictorConfigWithInvalidFieldsException(DomainException):
    message: str = "Cannot create a PredictorConfig with invalid fields."

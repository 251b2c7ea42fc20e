from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateWorkloadConfigWithInvalidFieldsException(DomainException):
    message: str = "Cannot create a WorkloadConfig with invalid fields."

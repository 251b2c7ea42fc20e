from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreatePlanningConfigWithInvalidFieldsException(DomainException):
    message: str = "Cannot create a PlanningConfig with invalid fields."

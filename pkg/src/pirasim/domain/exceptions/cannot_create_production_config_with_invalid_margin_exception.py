from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateProductionConfigWithInvalidMarginException(DomainException):
    message: str = "Cannot create a ProductionConfig with a margin not greater than 1."

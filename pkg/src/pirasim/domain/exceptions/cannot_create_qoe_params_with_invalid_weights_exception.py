from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateQoeParamsWithInvalidWeightsException(DomainException):
    message: str = "Cannot create QoEParams with non-positive penalties or a negative cost weight."

from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotComputeTrafficCostForUnknownPanCdnException(DomainException):
    message: str = "Cannot compute the traffic cost of a range on an unknown pan-CDN."

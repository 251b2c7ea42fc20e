from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreatePanCdnClassWithNegativeCostException(DomainException):
    message: str = "Cannot create a PanCdnClass with a negative cost coefficient."

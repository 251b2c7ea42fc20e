from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreatePanCdnClassWithInvalidIdException(DomainException):
    message: str = "Cannot create a PanCdnClass with a non-positive id."

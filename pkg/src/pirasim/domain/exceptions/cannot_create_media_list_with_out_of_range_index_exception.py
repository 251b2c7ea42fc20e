from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateMediaListWithOutOfRangeIndexException(DomainException):
    message: str = "Cannot create a MediaList with a current index outside the list."

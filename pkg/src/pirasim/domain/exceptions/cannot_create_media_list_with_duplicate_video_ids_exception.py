from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateMediaListWithDuplicateVideoIdsException(DomainException):
    message: str = "Cannot create a MediaList with duplicate video ids."

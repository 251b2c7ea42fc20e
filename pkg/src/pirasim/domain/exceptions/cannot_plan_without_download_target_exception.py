from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotPlanWithoutDownloadTargetException(DomainException):
    message: str = "Cannot plan a download without a target in the download sequence."

from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreatePanCdnCatalogWithoutClassesException(DomainException):
    message: str = "Cannot create a PanCdnCatalog without any pan-CDN class."

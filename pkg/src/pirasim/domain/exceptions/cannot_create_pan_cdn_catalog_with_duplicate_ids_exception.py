from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreatePanCdnCatalogWithDuplicateIdsException(DomainException):
    message: str = "Cannot create a PanCdnCatalog with duplicate pan-CDN ids."

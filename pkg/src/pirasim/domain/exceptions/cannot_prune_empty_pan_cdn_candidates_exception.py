from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotPruneEmptyPanCdnCandidatesException(DomainException):
    message: str = "Cannot prune an empty set of pan-CDN candidates."

from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotCreateRangeDecisionForUncachedPanCdnException(DomainException):
    message: str = "Cannot create a RangeDecision on a pan-CDN that does not cache the video."

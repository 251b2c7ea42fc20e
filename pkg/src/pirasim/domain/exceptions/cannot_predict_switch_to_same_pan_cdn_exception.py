from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotPredictSwitchToSamePanCdnException(DomainException):
    message: str = "Cannot predict a switch penalty between a pan-CDN and itself."

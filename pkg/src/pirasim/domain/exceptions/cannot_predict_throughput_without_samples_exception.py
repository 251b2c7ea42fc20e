from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotPredictThroughputWithoutSamplesException(DomainException):
    message: str = "Cannot predict the throughput of a pan-CDN without samples."

from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotRecordThroughputSampleOutOfOrderException(DomainException):
    message: str = "Cannot record a ThroughputSample older than the last sample of its pan-CDN."

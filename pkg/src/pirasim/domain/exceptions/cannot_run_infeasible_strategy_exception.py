from dataclasses import dataclass

from pirasim.domain.exceptions.domain_exception import DomainException


@dataclass(frozen=True)
class CannotRunInfeasibleStrategyException(DomainException):
    message: str = "Cannot run a strategy that produced an infeasible decision."

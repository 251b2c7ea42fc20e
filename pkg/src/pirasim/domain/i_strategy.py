from abc import ABC, abstractmethod

from pirasim.domain.decision_context import DecisionContext
from pirasim.domain.download_outcome import DownloadOutcome
from pirasim.domain.plan_result import PlanResult
from pirasim.domain.range_decision import RangeDecision


class IStrategy(ABC):
    @property
    @abstractmethod
    def name(self) -> str:
        """Label used in reports, e.g. ``pira`` or ``pure-4``."""

    @abstractmethod
    def decide(self, context: DecisionContext) -> RangeDecision:
        """Choose the next request. Called whenever the downloader is idle."""

    @abstractmethod
    def observe(self, outcome: DownloadOutcome) -> None:
        """Learn from the request that just completed."""

    @property
    def last_plan(self) -> PlanResult | None:
        """Planner statistics of the last decision, for planning strategies."""
        return None

from typing import Iterable, Tuple

from pirasim.domain.exceptions import (
    CannotComputeQoeWithNonPositiveWatchDurationException,
    CannotComputeTrafficCostForUnknownPanCdnException,
)
from pirasim.domain.pan_cdn_catalog import PanCdnCatalog
from pirasim.domain.qoe_params import QoEParams
from pirasim.domain.range_bytes import RangeBytes
from pirasim.domain.range_decision import RangeDecision

MEGABITS_PER_MEGABYTE = 8.0


def range_cost(size_megabits: float, cost_coeff: float) -> float:
    return size_megabits / MEGABITS_PER_MEGABYTE * cost_coeff


def traffic_cost(decisions: Iterable[Tuple[RangeDecision, RangeBytes]], catalog: PanCdnCatalog) -> float:
    total = 0.0
    for decision, size in decisions:
        if decision.pan_cdn_id not in catalog:
            raise CannotComputeTrafficCostForUnknownPanCdnException(
                message=f"Pan-CDN '{decision.pan_cdn_id}' is not configured."
            )
        total += range_cost(size.size_megabits, catalog.cost_of(decision.pan_cdn_id))
    return total


def qoe_video(total_rebuffer_s: float, startup_delay_s: float, watch_duration_s: float, params: QoEParams) -> float:
    """Per-video QoE; unclamped, so heavy stalling goes negative."""
    if watch_duration_s <= 0:
        raise CannotComputeQoeWithNonPositiveWatchDurationException()
    return 1.0 - params.mu1 * (total_rebuffer_s / watch_duration_s) - params.mu2 * startup_delay_s


def qoe_media_list(per_video_qoe: Iterable[float]) -> float:
    return sum(per_video_qoe)


def utility(qoe: float, cost: float, gamma: float) -> float:
    return qoe - gamma * cost

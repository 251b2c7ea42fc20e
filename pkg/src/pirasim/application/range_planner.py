"""
Receding-horizon planner over joint (pan-CDN, range duration) sequences.

Sequences are rolled forward through the same session transitions the simulator
uses, scored as QoE minus weighted cost, and the first action of the best one is
returned.
"""

import logging
from itertools import groupby
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from pirasim.domain import (
    CandidateSequence,
    DownloadTarget,
    IThroughputForecast,
    MediaList,
    PanCdnCatalog,
    PlanningConfig,
    PlanResult,
    PlanState,
    QoEParams,
    RangeDecision,
    SessionState,
    VideoSpec,
    range_cost,
)
from pirasim.domain.exceptions import (
    CannotPlanWithoutDownloadTargetException,
    CannotPruneEmptyPanCdnCandidatesException,
    CannotRunInfeasibleStrategyException,
)
from pirasim.domain.numeric import EPSILON

logger = logging.getLogger(__name__)

# utilities closer than this are ties and go to the tie-break rule
TIE_TOLERANCE = 1e-12

Candidate = Tuple[int, float]


def prune_pan_cdns(candidates: Iterable[int], predicted: Mapping[int, float], catalog: PanCdnCatalog) -> FrozenSet[int]:
    """
    Keep the pan-CDNs no other candidate beats on both throughput and price.

    A candidate is dropped only when another one is strictly faster AND strictly
    cheaper, so ties on either axis survive.

    Raises:
        CannotPruneEmptyPanCdnCandidatesException: If ``candidates`` is empty.
    """
    candidates = list(candidates)
    if not candidates:
        raise CannotPruneEmptyPanCdnCandidatesException()

    survivors = set()
    fastest_cheaper = float("-inf")
    by_cost = sorted(candidates, key=catalog.cost_of)
    for _, group in groupby(by_cost, key=catalog.cost_of):
        group = list(group)
        survivors.update(pan_cdn_id for pan_cdn_id in group if not predicted[pan_cdn_id] < fastest_cheaper)
        fastest_cheaper = max(fastest_cheaper, max(predicted[pan_cdn_id] for pan_cdn_id in group))
    return frozenset(survivors)


def min_range_for(predicted_mbps: float, bitrate_mbps: float, steps: Sequence[Tuple[float, float]]) -> float:
    """Smallest range worth exploring for a pan-CDN, a step function of throughput over bitrate."""
    ratio = predicted_mbps / bitrate_mbps
    minimum = steps[0][1]
    for threshold, step_minimum in steps:
        if ratio < threshold:
            break
        minimum = step_minimum
    return minimum


def count_enumerated(config: PlanningConfig, pan_cdn_count: int, range_count: int) -> int:
    """Scored sequences of an unpruned search: the sum of (|PC|·|R|)^i for i = 1..n."""
    branching = pan_cdn_count * range_count
    return sum(branching**depth for depth in range(1, config.horizon_n + 1))


class _Search:
    """Per-call search state, so one planner can serve concurrent ``plan`` calls."""

    __slots__ = ("state", "media", "forecast", "templates", "best_utility", "best_key", "best_actions", "best_decision")

    def __init__(self, state: PlanState, media: MediaList, forecast: IThroughputForecast):
        self.state = state
        self.media = media
        self.forecast = forecast
        # video id -> surviving (pan-CDN, minimum range) pairs; predictions are frozen for the call
        self.templates: Dict[str, List[Tuple[int, float]]] = {}
        self.best_utility = float("-inf")
        self.best_key: Tuple[float, float, int] | None = None
        self.best_actions: Tuple[Candidate, ...] = ()
        self.best_decision: RangeDecision | None = None


class RangePlanner:
    """
    Exhaustive planner over the (pruned) candidate tree up to ``horizon_n`` requests.

    Only terminal rollouts compete for the argmax: those that reach the horizon
    and those that run out of download targets. Every rollout node is counted as
    a scored sequence.
    """

    def __init__(self, config: PlanningConfig, params: QoEParams, catalog: PanCdnCatalog):
        self._config = config
        self._params = params
        self._catalog = catalog

    @property
    def config(self) -> PlanningConfig:
        return self._config

    def plan(self, state: PlanState, media: MediaList, forecast: IThroughputForecast) -> PlanResult:
        """
        Pick the next request.

        Args:
            state: Session snapshot, download sequence and frozen per-CDN predictions.
            media: The media list being played.
            forecast: Throughput and switch-penalty model used by the rollout.

        Returns:
            PlanResult: decision, best utility, scored-sequence count and diagnostics.

        Raises:
            CannotPlanWithoutDownloadTargetException: If the download sequence is empty.
        """
        if not state.download_sequence:
            raise CannotPlanWithoutDownloadTargetException()

        target = state.download_sequence[0]
        video = media.video_at(target.video_index)
        feasible = [pan_cdn_id for pan_cdn_id in self._catalog.ids if video.is_cached_on(pan_cdn_id)]
        pruned = frozenset()
        if self._config.pruning.filters_pan_cdns and feasible:
            pruned = frozenset(feasible) - prune_pan_cdns(feasible, state.predicted_mbps, self._catalog)

        search = _Search(state, media, forecast)
        scored = self._explore(search, state.session, 0, 1, 0.0, [], None)

        if search.best_decision is None:
            decision = self._fallback(state.session, media, target, feasible)
            logger.warning(
                "Planner fell back to pan-CDN%d for '%s' (no candidate survived pruning)",
                decision.pan_cdn_id,
                decision.video_id,
            )
            return PlanResult(decision, float("-inf"), scored, None, pruned, fallback=True)

        logger.debug(
            "Planned %s at pan-CDN%d for %.2fs: utility %.4f over %d scored sequences, pruned %s",
            search.best_decision.video_id,
            search.best_decision.pan_cdn_id,
            search.best_decision.range_duration_s,
            search.best_utility,
            scored,
            sorted(pruned),
        )
        return PlanResult(
            decision=search.best_decision,
            utility=search.best_utility,
            scored_sequences=scored,
            best_sequence=CandidateSequence(search.best_actions, search.best_utility),
            pruned_pan_cdns=pruned,
        )

    def _explore(
        self,
        search: _Search,
        session: SessionState,
        position: int,
        depth: int,
        utility_so_far: float,
        path: List[Candidate],
        first: RangeDecision | None,
    ) -> int:
        """Roll every candidate of ``position`` forward; returns the sequences scored in this subtree."""
        media = search.media
        params = self._params
        sequence = search.state.download_sequence
        target = sequence[position]
        watch_s = media.watch_of(session.viewing_index)
        # horizon leaves are only scored, never stepped into
        leaf = depth >= self._config.horizon_n
        scored = 0
        for (pan_cdn_id, range_s), repeats in self._candidates(search, session, target):
            mbps, cost = self._request(session, media, target, pan_cdn_id, range_s, search.forecast)
            if leaf:
                rebuffer, startup, content = session.range_terms(media, target.video_id, range_s, mbps, params)
                root = first or RangeDecision(target.video_id, pan_cdn_id, range_s)
            else:
                decision = RangeDecision(target.video_id, pan_cdn_id, range_s)
                next_session, rebuffer, startup, content = session.roll_range(media, decision, mbps, params)
                root = first or decision
            utility = utility_so_far + (
                content - params.mu1 * rebuffer / watch_s - params.mu2 * startup - params.gamma * cost
            )
            path.append((pan_cdn_id, range_s))

            subtree = 1
            next_position = None if leaf else self._next_position(next_session, media, sequence, position)
            if next_position is None:
                self._consider(utility, root, path, search)
            else:
                subtree += self._explore(search, next_session, next_position, depth + 1, utility, path, root)
            path.pop()
            # candidate ranges clamped to the same length share one subtree but each counts as scored
            scored += subtree * repeats
        return scored

    def _request(
        self,
        session: SessionState,
        media: MediaList,
        target: DownloadTarget,
        pan_cdn_id: int,
        range_s: float,
        forecast: IThroughputForecast,
    ) -> Tuple[float, float]:
        """Effective throughput of the whole request, switch penalty included, and its traffic cost."""
        size = media.video_at(target.video_index).size_megabits(range_s)
        alpha, setup_s = forecast.switch_penalty(session.last_pan_cdn_id, pan_cdn_id, session.now_s)
        mbps = forecast.average_mbps(pan_cdn_id, session.now_s + setup_s, size / alpha)
        download_s = size / alpha / mbps + setup_s
        return size / download_s, range_cost(size, self._catalog.cost_of(pan_cdn_id))

    @staticmethod
    def _next_position(
        session: SessionState, media: MediaList, sequence: Tuple[DownloadTarget, ...], position: int
    ) -> int | None:
        if session.finished:
            return None
        for index in range(position, len(sequence)):
            target = sequence[index]
            if not session.is_downloadable(target.video_id):
                continue
            video = media.video_at(target.video_index)
            downloaded = session.downloaded_of(target.video_id)
            if downloaded < target.target_downloaded_s - EPSILON and not video.is_complete(downloaded):
                return index
        return None

    def _consider(self, utility: float, decision: RangeDecision, path: List[Candidate], search: _Search) -> None:
        if utility > search.best_utility + TIE_TOLERANCE:
            key = self._catalog.tie_break_key(decision.pan_cdn_id, decision.range_duration_s)
        elif utility >= search.best_utility - TIE_TOLERANCE:
            key = self._catalog.tie_break_key(decision.pan_cdn_id, decision.range_duration_s)
            if search.best_key is not None and not key < search.best_key:
                return
        else:
            return
        search.best_utility = utility
        search.best_key = key
        search.best_actions = tuple(path)
        search.best_decision = decision

    def _candidates(
        self, search: _Search, session: SessionState, target: DownloadTarget
    ) -> List[Tuple[Candidate, int]]:
        """Distinct (pan-CDN, clamped range) pairs explorable for ``target``, each with its multiplicity."""
        media = search.media
        video = media.video_at(target.video_index)
        templates = self._templates(search, video)
        if not templates:
            return []

        limit = video.chunk_remaining_s(session.downloaded_of(video.id))
        startup_floor = self._startup_floor(session, media, video.id)
        candidates: List[Tuple[Candidate, int]] = []
        for pan_cdn_id, floor in templates:
            repeats: Dict[float, int] = {}
            for range_s in self._config.candidate_ranges_s:
                if range_s < floor - EPSILON:
                    continue
                clamped = min(range_s, limit)
                if clamped < startup_floor - EPSILON and clamped < limit - EPSILON:
                    continue
                repeats[clamped] = repeats.get(clamped, 0) + 1
            candidates.extend(((pan_cdn_id, clamped), count) for clamped, count in repeats.items())
        return candidates

    def _templates(self, search: _Search, video: VideoSpec) -> List[Tuple[int, float]]:
        """Pan-CDNs surviving Pruning I for ``video``, each with its Pruning II minimum range."""
        templates = search.templates.get(video.id)
        if templates is not None:
            return templates

        predicted = search.state.predicted_mbps
        feasible = [pan_cdn_id for pan_cdn_id in self._catalog.ids if video.is_cached_on(pan_cdn_id)]
        if feasible and self._config.pruning.filters_pan_cdns:
            survivors = prune_pan_cdns(feasible, predicted, self._catalog)
            feasible = [pan_cdn_id for pan_cdn_id in feasible if pan_cdn_id in survivors]
        steps = self._config.range_ratio_steps
        templates = [
            (
                pan_cdn_id,
                min_range_for(predicted[pan_cdn_id], video.bitrate_mbps, steps)
                if self._config.pruning.filters_ranges
                else 0.0,
            )
            for pan_cdn_id in feasible
        ]
        search.templates[video.id] = templates
        return templates

    def _startup_floor(self, session: SessionState, media: MediaList, video_id: str) -> float:
        """Range needed so a not-yet-started viewed video reaches the startup threshold."""
        if session.started or session.viewed_id(media) != video_id:
            return 0.0
        return self._params.tau_st_s - session.ledger.buffer_of(video_id)

    def _fallback(
        self, session: SessionState, media: MediaList, target: DownloadTarget, feasible: Sequence[int]
    ) -> RangeDecision:
        video = media.video_at(target.video_index)
        if not feasible:
            raise CannotRunInfeasibleStrategyException(
                message=f"Video '{video.id}' is not cached on any configured pan-CDN."
            )
        pan_cdn_id = self._catalog.cheapest(feasible)
        limit = video.chunk_remaining_s(session.downloaded_of(video.id))
        range_s = max(min(self._config.candidate_ranges_s), self._startup_floor(session, media, video.id))
        return RangeDecision(video.id, pan_cdn_id, min(range_s, limit))

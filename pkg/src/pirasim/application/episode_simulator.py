"""
Trace-driven simulation of one short-video session.

One request is in flight at a time. Whenever the downloader is idle the preload
policy names what to fetch and the strategy chooses how; playback, stalls,
startup and swipes follow the shared session transitions.
"""

import logging
import math
import time
from typing import Callable, List, Tuple

import numpy as np

from pirasim.domain import (
    DecisionContext,
    DecisionRecord,
    DownloadOutcome,
    EpisodeResult,
    EventKind,
    ILinkModel,
    IStrategy,
    MediaList,
    PanCdnCatalog,
    PreloadPolicy,
    QoEParams,
    RangeDecision,
    SessionEvent,
    SessionMetrics,
    SessionState,
    StepKind,
    StepOutcome,
    TraceFile,
    Workload,
)
from pirasim.domain.exceptions import CannotRunInfeasibleStrategyException, DomainException
from pirasim.domain.numeric import EPSILON

logger = logging.getLogger(__name__)

LinkFactory = Callable[[TraceFile, int], ILinkModel]

MAX_STEPS = 200_000
# extra trace seconds kept after the watch time when picking an episode window
TRACE_SLACK_S = 120.0


class EpisodeSimulator:
    def __init__(
        self,
        catalog: PanCdnCatalog,
        params: QoEParams,
        policy: PreloadPolicy,
        link_factory: LinkFactory,
        player_cap_s: float = 30.0,
        probe_charged: bool = True,
    ):
        self._catalog = catalog
        self._params = params
        self._policy = policy
        self._link_factory = link_factory
        self._player_cap_s = player_cap_s
        self._probe_charged = probe_charged

    @property
    def params(self) -> QoEParams:
        return self._params

    def window_offset(self, traces: TraceFile, media: MediaList, seed: int) -> int:
        """Seeded start second of the episode inside the trace."""
        needed = int(math.ceil(2.0 * media.total_watch_s() + TRACE_SLACK_S))
        latest = traces.length_s - needed
        if latest <= 0:
            return 0
        return int(np.random.default_rng(seed).integers(0, latest + 1))

    def run_episode(self, traces: TraceFile, workload: Workload, strategy: IStrategy, seed: int) -> EpisodeResult:
        """
        Play ``workload`` over ``traces`` with ``strategy`` choosing every request.

        Args:
            traces: Per-pan-CDN throughput of one period.
            workload: Media list and swipe schedule.
            strategy: A fresh strategy instance; strategies keep per-session state.
            seed: Picks the trace window, so replications see different network conditions.

        Returns:
            EpisodeResult: metrics, the step log and events; deterministic for fixed inputs.

        Raises:
            CannotRunInfeasibleStrategyException: If the strategy asks for something unservable.
            CannotDownloadRangeBeyondTraceException: If the trace ends before the session.
        """
        media = workload.media
        offset_s = self.window_offset(traces, media, seed)
        link = self._link_factory(traces, offset_s)
        logger.info(
            "Episode start: strategy=%s seed=%d period=%s trace=%s offset=%ds videos=%d",
            strategy.name,
            seed,
            traces.period,
            traces.trace_id,
            offset_s,
            len(media),
        )

        state = SessionState.initial(media, self._player_cap_s)
        metrics = SessionMetrics.empty(video.id for video in media.videos)
        records: List[DecisionRecord] = []
        events: List[SessionEvent] = []
        latencies: List[float] = []

        while not state.finished:
            if len(records) >= MAX_STEPS:
                raise CannotRunInfeasibleStrategyException(
                    message=f"Episode made no progress after {MAX_STEPS} steps with strategy {strategy.name}."
                )
            sequence = self._policy.download_sequence(state, media)
            start_s = state.now_s
            viewed_buffer = state.viewed_buffer_s(media)

            if not sequence:
                duration_s = self._policy.idle_duration_s(state, media)
                state, outcome = state.apply_idle(media, duration_s, self._params)
                records.append(self._record(len(records), start_s, outcome, 0.0, True, None))
            else:
                context = DecisionContext(start_s, media, state, sequence, self._catalog, ground_truth=link)
                started = time.perf_counter()
                decision = strategy.decide(context)
                latencies.append(time.perf_counter() - started)
                state, outcome, realized, pooled = self._serve(link, state, media, sequence, decision, strategy)
                plan = strategy.last_plan
                records.append(self._record(len(records), start_s, outcome, realized, pooled, plan))
                strategy.observe(
                    DownloadOutcome(
                        kind=outcome.kind,
                        pan_cdn_id=decision.pan_cdn_id,
                        finished_at_s=start_s + outcome.download_time_s,
                        realized_mbps=realized,
                        rebuffer_s=outcome.rebuffer_s,
                        viewed_buffer_s=state.viewed_buffer_s(media) if not state.finished else 0.0,
                    )
                )

            metrics = metrics.record(
                outcome.viewed_video_id,
                outcome.rebuffer_s,
                outcome.startup_delay_s,
                outcome.pan_cdn_id,
                outcome.size_megabits,
                outcome.cost,
            )
            events.extend(self._events(start_s, viewed_buffer, outcome, media, state))

        result = EpisodeResult(
            strategy=strategy.name,
            seed=seed,
            period=traces.period,
            trace_id=traces.trace_id,
            offset_s=offset_s,
            media=media,
            qoe_params=self._params,
            catalog=self._catalog,
            player_cap_s=self._player_cap_s,
            probe_charged=self._probe_charged,
            records=tuple(records),
            metrics=metrics,
            events=tuple(sorted(events, key=SessionEvent.sort_key)),
            decision_latencies_s=tuple(latencies),
        )
        logger.info(
            "Episode finish: strategy=%s seed=%d utility=%.4f rebuffer_ratio=%.4f cost=%.4f",
            strategy.name,
            seed,
            result.utility,
            result.rebuffer_ratio,
            result.total_cost,
        )
        return result

    def _serve(
        self,
        link: ILinkModel,
        state: SessionState,
        media: MediaList,
        sequence: tuple,
        decision: RangeDecision,
        strategy: IStrategy,
    ) -> Tuple[SessionState, StepOutcome, float, bool]:
        if decision.pan_cdn_id not in self._catalog:
            self._abort(strategy, f"pan-CDN{decision.pan_cdn_id} is not configured")

        pooled = link.is_pooled(decision.pan_cdn_id, state.now_s)
        if decision.is_probe:
            viewed = media.video_at(state.viewing_index)
            size = viewed.size_megabits(decision.range_duration_s)
            _, realized = link.download_range(decision, size, state.now_s, pooled)
            stepped, outcome = state.apply_probe(
                media,
                decision.pan_cdn_id,
                decision.range_duration_s,
                realized,
                self._params,
                self._catalog,
                charged=self._probe_charged,
            )
            return stepped, outcome, realized, pooled

        decision = self._admit(state, media, sequence, decision, strategy)
        video = media.video_at(media.index_of(decision.video_id))
        size = video.size_megabits(decision.range_duration_s)
        _, realized = link.download_range(decision, size, state.now_s, pooled)
        stepped, outcome = state.apply_range(media, decision, realized, self._params, self._catalog)
        return stepped, outcome, realized, pooled

    def _admit(
        self, state: SessionState, media: MediaList, sequence: tuple, decision: RangeDecision, strategy: IStrategy
    ) -> RangeDecision:
        """Clamp a range to its chunk and to the startup threshold; reject unservable requests."""
        if decision.video_id not in {target.video_id for target in sequence}:
            self._abort(strategy, f"'{decision.video_id}' is not in the download sequence")
        video = media.video_at(media.index_of(decision.video_id))
        if not video.is_cached_on(decision.pan_cdn_id):
            self._abort(strategy, f"'{video.id}' is not cached on pan-CDN{decision.pan_cdn_id}")

        limit = video.chunk_remaining_s(state.downloaded_of(video.id))
        range_s = min(decision.range_duration_s, limit)
        if not state.started and video.id == state.viewed_id(media):
            needed = self._params.tau_st_s - state.ledger.buffer_of(video.id)
            if range_s < needed - EPSILON:
                range_s = min(needed, limit)
        if range_s != decision.range_duration_s:
            decision = decision.with_range(range_s)
        decision.validate_for(video)
        return decision

    @staticmethod
    def _abort(strategy: IStrategy, reason: str) -> None:
        logger.warning("Aborting episode: strategy %s is infeasible (%s)", strategy.name, reason)
        raise CannotRunInfeasibleStrategyException(message=f"Strategy {strategy.name} is infeasible: {reason}.")

    @staticmethod
    def _record(
        index: int, start_s: float, outcome: StepOutcome, realized: float, pooled: bool, plan
    ) -> DecisionRecord:
        return DecisionRecord(
            index=index,
            kind=outcome.kind,
            start_s=start_s,
            viewed_video_id=outcome.viewed_video_id,
            video_id=outcome.video_id,
            pan_cdn_id=outcome.pan_cdn_id,
            range_duration_s=outcome.range_duration_s,
            size_megabits=outcome.size_megabits,
            realized_mbps=realized,
            pooled=pooled,
            download_time_s=outcome.download_time_s,
            wait_time_s=outcome.wait_time_s,
            rebuffer_s=outcome.rebuffer_s,
            startup_delay_s=outcome.startup_delay_s,
            cost=outcome.cost,
            elapsed_s=outcome.elapsed_s,
            swiped=outcome.swiped,
            scored_sequences=plan.scored_sequences if plan is not None and outcome.kind == StepKind.RANGE else 0,
            fallback=bool(plan is not None and plan.fallback and outcome.kind == StepKind.RANGE),
        )

    @staticmethod
    def _events(
        start_s: float, viewed_buffer: float, outcome: StepOutcome, media: MediaList, state: SessionState
    ) -> List[SessionEvent]:
        viewed = outcome.viewed_video_id
        end_s = start_s + outcome.elapsed_s
        busy_s = outcome.download_time_s if outcome.kind != StepKind.IDLE else outcome.elapsed_s
        events = []
        if outcome.rebuffer_s > 0:
            events.append(SessionEvent(start_s + min(viewed_buffer, busy_s), EventKind.REBUFFER_START, viewed))
            events.append(SessionEvent(start_s + busy_s, EventKind.REBUFFER_END, viewed))
        if outcome.kind == StepKind.RANGE:
            events.append(SessionEvent(start_s + outcome.download_time_s, EventKind.RANGE_COMPLETE, outcome.video_id))
        elif outcome.kind == StepKind.PROBE:
            events.append(SessionEvent(start_s + outcome.download_time_s, EventKind.PROBE_COMPLETE, viewed))
        if outcome.swiped:
            events.append(SessionEvent(end_s, EventKind.SWIPE, viewed))
        if outcome.playback_started and not state.finished:
            events.append(SessionEvent(end_s, EventKind.STARTUP_COMPLETE, state.viewed_id(media)))
        return events


def replay_check(result: EpisodeResult) -> bool:
    """
    Recompute the session from its step log and compare with the recorded accounting.

    Returns:
        bool: True when every step and the final metrics match bit for bit.
    """
    media = result.media
    params = result.qoe_params
    state = SessionState.initial(media, result.player_cap_s)
    metrics = SessionMetrics.empty(video.id for video in media.videos)
    try:
        for record in result.records:
            if record.start_s != state.now_s or state.finished:
                return False
            if record.kind == StepKind.IDLE:
                state, outcome = state.apply_idle(media, record.elapsed_s, params)
            elif record.kind == StepKind.PROBE:
                state, outcome = state.apply_probe(
                    media,
                    record.pan_cdn_id,
                    record.range_duration_s,
                    record.realized_mbps,
                    params,
                    result.catalog,
                    charged=result.probe_charged,
                )
            else:
                decision = RangeDecision(record.video_id, record.pan_cdn_id, record.range_duration_s)
                state, outcome = state.apply_range(media, decision, record.realized_mbps, params, result.catalog)
            if not _matches(record, outcome):
                return False
            metrics = metrics.record(
                outcome.viewed_video_id,
                outcome.rebuffer_s,
                outcome.startup_delay_s,
                outcome.pan_cdn_id,
                outcome.size_megabits,
                outcome.cost,
            )
    except (DomainException, KeyError, IndexError, ZeroDivisionError):
        return False
    return state.finished and metrics == result.metrics


def _matches(record: DecisionRecord, outcome: StepOutcome) -> bool:
    return (
        record.viewed_video_id == outcome.viewed_video_id
        and record.download_time_s == outcome.download_time_s
        and record.wait_time_s == outcome.wait_time_s
        and record.rebuffer_s == outcome.rebuffer_s
        and record.startup_delay_s == outcome.startup_delay_s
        and record.cost == outcome.cost
        and record.elapsed_s == outcome.elapsed_s
        and record.swiped == outcome.swiped
    )

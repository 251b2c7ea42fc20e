"""Builders shared by the test suites."""

import logging
from typing import Iterable, List, Mapping, Sequence, Tuple

from pirasim.application import EpisodeSimulator
from pirasim.configuration import STDERR_HANDLER_NAME
from pirasim.domain import (
    BufferLedger,
    DecisionContext,
    DownloadOutcome,
    IStrategy,
    LinkConfig,
    MediaList,
    PanCdnCatalog,
    Period,
    PreloadPolicy,
    QoEParams,
    RangeDecision,
    SessionState,
    ThroughputTrace,
    TraceFile,
    VideoSpec,
)
from pirasim.infrastructure import TraceLink

ALL_CDNS = (1, 2, 3, 4)
IDEAL_LINK = LinkConfig(pool_idle_timeout_s=180.0, degradation_alpha=1.0, setup_s=0.0)


def make_video(video_id: str = "v0", duration_s: float = 20.0, bitrate_mbps: float = 2.0, cached_on=ALL_CDNS):
    return VideoSpec(id=video_id, duration_s=duration_s, bitrate_mbps=bitrate_mbps, cached_on=frozenset(cached_on))


def make_media(*videos, watch: Sequence[float] | float = 10.0) -> MediaList:
    watches = [watch] * len(videos) if isinstance(watch, (int, float)) else list(watch)
    return MediaList(list(videos), watches)


def constant_traces(rates: Mapping[int, float], length_s: int = 3600, period: Period = Period.OFF_PEAK) -> TraceFile:
    return TraceFile(
        "constant", period, [ThroughputTrace.constant(pan_cdn_id, mbps, length_s) for pan_cdn_id, mbps in rates.items()]
    )


def series_traces(series: Mapping[int, Sequence[float]], period: Period = Period.OFF_PEAK) -> TraceFile:
    return TraceFile(
        "series", period, [ThroughputTrace.of(pan_cdn_id, values) for pan_cdn_id, values in series.items()]
    )


def ideal_link(traces: TraceFile, offset_s: int) -> TraceLink:
    return TraceLink(traces, IDEAL_LINK, offset_s)


def make_simulator(
    catalog: PanCdnCatalog | None = None,
    params: QoEParams | None = None,
    policy: PreloadPolicy | None = None,
    link_factory=ideal_link,
    player_cap_s: float = 30.0,
) -> EpisodeSimulator:
    return EpisodeSimulator(
        catalog=catalog or PanCdnCatalog.default(),
        params=params or QoEParams(),
        policy=policy or PreloadPolicy(),
        link_factory=link_factory,
        player_cap_s=player_cap_s,
    )


def started_session(
    media: MediaList,
    buffers: Mapping[str, float],
    downloaded: Mapping[str, float] | None = None,
    last_pan_cdn_id: int | None = None,
    player_cap_s: float = 30.0,
) -> SessionState:
    """A session playing entry 0 with the given buffers, as if startup already happened."""
    ids = [video.id for video in media.videos]
    return SessionState(
        now_s=0.0,
        viewing_index=0,
        ledger=BufferLedger({video_id: buffers.get(video_id, 0.0) for video_id in ids}, player_cap_s),
        downloaded_s={video_id: (downloaded or buffers).get(video_id, 0.0) for video_id in ids},
        started=True,
        last_pan_cdn_id=last_pan_cdn_id,
    )


class ScriptExhausted(Exception):
    pass


class ScriptedStrategy(IStrategy):
    """Plays back a fixed list of (pan_cdn_id, range_duration_s) choices for whatever target comes next."""

    def __init__(self, script: Iterable[Tuple[int, float]]):
        self._script: List[Tuple[int, float]] = list(script)
        self.used = 0

    @property
    def name(self) -> str:
        return "scripted"

    @property
    def exhausted(self) -> bool:
        return self.used == len(self._script)

    def decide(self, context: DecisionContext) -> RangeDecision:
        if self.used >= len(self._script):
            raise ScriptExhausted()
        pan_cdn_id, range_s = self._script[self.used]
        self.used += 1
        return RangeDecision(context.target.video_id, pan_cdn_id, range_s)

    def observe(self, outcome: DownloadOutcome) -> None:
        pass


def detach_stderr_logging() -> None:
    """Undo ``configure_logging`` so a captured stderr stream does not outlive its test."""
    logger = logging.getLogger("pirasim")
    for handler in [handler for handler in logger.handlers if handler.get_name() == STDERR_HANDLER_NAME]:
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)

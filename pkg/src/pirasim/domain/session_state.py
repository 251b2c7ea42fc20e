"""Playback session state and its transitions.

The simulator, the replay check and the planner rollout all advance sessions
through these transitions, so realised and planned accounting agree.
"""

from dataclasses import dataclass, field, replace
from typing import Mapping, Tuple

from pirasim.domain.buffer_dynamics import (
    advance_buffer_current,
    advance_buffer_prefetch,
    download_time,
    prefetch_overflow_s,
    rebuffer_time,
    startup_delay,
)
from pirasim.domain.buffer_ledger import BufferLedger
from pirasim.domain.exceptions import (
    CannotAdvanceBufferForUnknownVideoException,
    CannotAdvanceBufferWithNonPositiveThroughputException,
)
from pirasim.domain.media_list import MediaList
from pirasim.domain.numeric import EPSILON, positive
from pirasim.domain.pan_cdn_catalog import PanCdnCatalog
from pirasim.domain.qoe import range_cost
from pirasim.domain.qoe_params import QoEParams
from pirasim.domain.range_decision import RangeDecision
from pirasim.domain.step_kind import StepKind
from pirasim.domain.step_outcome import StepOutcome
from pirasim.domain.video_spec import VideoSpec


@dataclass(frozen=True)
class SessionState:
    now_s: float
    viewing_index: int
    ledger: BufferLedger
    downloaded_s: Mapping[str, float] = field(default_factory=dict)
    played_s: float = 0.0
    started: bool = False
    startup_charged: bool = False
    last_pan_cdn_id: int | None = None
    finished: bool = False

    @classmethod
    def initial(cls, media: MediaList, player_cap_s: float, now_s: float = 0.0) -> "SessionState":
        upcoming = [video.id for video in media.videos[media.current_index :]]
        return cls(
            now_s=now_s,
            viewing_index=media.current_index,
            ledger=BufferLedger.empty(upcoming, player_cap_s),
            downloaded_s={video_id: 0.0 for video_id in upcoming},
            finished=len(media) == 0,
        )

    def viewed_id(self, media: MediaList) -> str:
        return media.video_at(self.viewing_index).id

    def viewed_buffer_s(self, media: MediaList) -> float:
        return self.ledger.buffer_of(self.viewed_id(media))

    def downloaded_of(self, video_id: str) -> float:
        return self.downloaded_s.get(video_id, 0.0)

    def is_downloadable(self, video_id: str) -> bool:
        return video_id in self.ledger

    def remaining_watch_s(self, media: MediaList) -> float:
        return positive(media.watch_of(self.viewing_index) - self.played_s)

    def _viewed_complete(self, media: MediaList) -> bool:
        viewed = media.video_at(self.viewing_index)
        return viewed.is_complete(self.downloaded_of(viewed.id))

    def apply_range(
        self,
        media: MediaList,
        decision: RangeDecision,
        avg_throughput_mbps: float,
        params: QoEParams,
        catalog: PanCdnCatalog,
    ) -> Tuple["SessionState", StepOutcome]:
        """
        Download ``decision`` at ``avg_throughput_mbps`` and play the viewed video meanwhile.

        Args:
            media: The media list the session plays.
            decision: A range of the viewed video or of a later list entry.
            avg_throughput_mbps: Effective average throughput of the whole request.
            params: QoE parameters (startup threshold and accumulation mode).
            catalog: Pan-CDN prices.

        Returns:
            Tuple[SessionState, StepOutcome]: the next state and the step accounting.

        Raises:
            CannotAdvanceBufferForUnknownVideoException: If the video already left the player.
            CannotAdvanceBufferWithNonPositiveThroughputException: If the throughput is not positive.
        """
        viewed_id = media.video_at(self.viewing_index).id
        stepped, effects = self._range_step(media, decision, avg_throughput_mbps, params)
        download_time_s, wait_time_s, rebuffer, startup, content_reward, elapsed, playback_started, swiped = effects
        size = media.video_at(media.index_of(decision.video_id)).size_megabits(decision.range_duration_s)
        outcome = StepOutcome(
            kind=StepKind.RANGE,
            viewed_video_id=viewed_id,
            video_id=decision.video_id,
            pan_cdn_id=decision.pan_cdn_id,
            range_duration_s=decision.range_duration_s,
            size_megabits=size,
            download_time_s=download_time_s,
            wait_time_s=wait_time_s,
            rebuffer_s=rebuffer,
            startup_delay_s=startup,
            cost=range_cost(size, catalog.cost_of(decision.pan_cdn_id)),
            content_reward=content_reward,
            elapsed_s=elapsed,
            playback_started=playback_started,
            swiped=swiped,
        )
        return stepped, outcome

    def roll_range(
        self, media: MediaList, decision: RangeDecision, avg_throughput_mbps: float, params: QoEParams
    ) -> Tuple["SessionState", float, float, float]:
        """``apply_range`` without the step record: next state, stall, startup delay and content reward."""
        stepped, effects = self._range_step(media, decision, avg_throughput_mbps, params)
        return stepped, effects[2], effects[3], effects[4]

    def range_terms(
        self, media: MediaList, video_id: str, range_duration_s: float, avg_throughput_mbps: float, params: QoEParams
    ) -> Tuple[float, float, float]:
        """
        Stall, startup delay and content reward of a range, without building the next state.

        The values are the ones ``apply_range`` would account for the same request.

        Raises:
            CannotAdvanceBufferForUnknownVideoException: If the video already left the player.
            CannotAdvanceBufferWithNonPositiveThroughputException: If the throughput is not positive.
        """
        if video_id not in self.ledger:
            raise CannotAdvanceBufferForUnknownVideoException(
                message=f"Video '{video_id}' is not in the player buffer."
            )
        viewed = media.video_at(self.viewing_index)
        index = media.index_of(video_id)
        video = media.video_at(index)
        download_time_s = download_time(video, range_duration_s, avg_throughput_mbps)
        delivered = range_duration_s
        if video.id != viewed.id:
            delivered -= prefetch_overflow_s(self.ledger, video.id, range_duration_s)
        return self._range_effects(media, viewed, video, index, delivered, download_time_s, params)

    def _range_step(
        self, media: MediaList, decision: RangeDecision, avg_throughput_mbps: float, params: QoEParams
    ) -> Tuple["SessionState", tuple]:
        if decision.video_id not in self.ledger:
            raise CannotAdvanceBufferForUnknownVideoException(
                message=f"Video '{decision.video_id}' is not in the player buffer."
            )
        viewed = media.video_at(self.viewing_index)
        index = media.index_of(decision.video_id)
        video = media.video_at(index)
        viewed_complete = viewed.is_complete(self.downloaded_of(viewed.id))

        if video.id == viewed.id:
            ledger, download_time_s, wait_time_s = advance_buffer_current(
                self.ledger, video, decision, avg_throughput_mbps
            )
            elapsed = download_time_s + wait_time_s
            delivered = decision.range_duration_s
        else:
            ledger, download_time_s, wait_time_s = advance_buffer_prefetch(
                self.ledger, viewed.id, video, decision, avg_throughput_mbps
            )
            elapsed = download_time_s
            delivered = decision.range_duration_s - wait_time_s

        rebuffer, startup, content_reward = self._range_effects(
            media, viewed, video, index, delivered, download_time_s, params
        )
        played_gain = elapsed if viewed_complete else elapsed - rebuffer
        downloaded = dict(self.downloaded_s)
        downloaded[video.id] = self.downloaded_of(video.id) + delivered

        stepped = self._advance(
            elapsed,
            ledger,
            played_gain,
            downloaded_s=downloaded,
            startup_charged=self.startup_charged or startup > 0.0,
            last_pan_cdn_id=decision.pan_cdn_id,
        )
        stepped, playback_started, swiped = stepped._settle(media, params)
        effects = (download_time_s, wait_time_s, rebuffer, startup, content_reward, elapsed, playback_started, swiped)
        return stepped, effects

    def _range_effects(
        self,
        media: MediaList,
        viewed: VideoSpec,
        video: VideoSpec,
        index: int,
        delivered_s: float,
        download_time_s: float,
        params: QoEParams,
    ) -> Tuple[float, float, float]:
        """Stall, startup delay and share of needed content for a range measured on the pre-step state."""
        viewed_buffer = self.ledger.buffer_of(viewed.id)
        startup = 0.0
        if video.id == viewed.id and not self.started and (params.startup_accumulates or not self.startup_charged):
            startup = startup_delay(viewed_buffer, params.tau_st_s, download_time_s)
        rebuffer = 0.0
        if not viewed.is_complete(self.downloaded_of(viewed.id)):
            rebuffer = rebuffer_time(viewed_buffer, download_time_s)
        before = self.downloaded_of(video.id)
        needed = media.needed_content_s(index)
        return rebuffer, startup, positive(min(before + delivered_s, needed) - before) / needed

    def apply_probe(
        self,
        media: MediaList,
        pan_cdn_id: int,
        probe_duration_s: float,
        avg_throughput_mbps: float,
        params: QoEParams,
        catalog: PanCdnCatalog,
        charged: bool = True,
    ) -> Tuple["SessionState", StepOutcome]:
        """Measure a pan-CDN with a short download that never enters the buffer."""
        if avg_throughput_mbps <= 0:
            raise CannotAdvanceBufferWithNonPositiveThroughputException()
        viewed = media.video_at(self.viewing_index)
        viewed_buffer = self.ledger.buffer_of(viewed.id)
        viewed_complete = self._viewed_complete(media)

        size = viewed.size_megabits(probe_duration_s)
        download_time_s = size / avg_throughput_mbps
        rebuffer = 0.0 if viewed_complete else rebuffer_time(viewed_buffer, download_time_s)
        played_gain = download_time_s if viewed_complete else download_time_s - rebuffer

        stepped = self._advance(
            download_time_s,
            self.ledger.with_buffers({viewed.id: positive(viewed_buffer - download_time_s)}),
            played_gain,
        )
        stepped, playback_started, swiped = stepped._settle(media, params)
        outcome = StepOutcome(
            kind=StepKind.PROBE,
            viewed_video_id=viewed.id,
            pan_cdn_id=pan_cdn_id,
            range_duration_s=probe_duration_s,
            size_megabits=size,
            download_time_s=download_time_s,
            rebuffer_s=rebuffer,
            cost=range_cost(size, catalog.cost_of(pan_cdn_id)) if charged else 0.0,
            elapsed_s=download_time_s,
            playback_started=playback_started,
            swiped=swiped,
        )
        return stepped, outcome

    def apply_idle(self, media: MediaList, duration_s: float, params: QoEParams) -> Tuple["SessionState", StepOutcome]:
        """Play for ``duration_s`` without downloading."""
        viewed = media.video_at(self.viewing_index)
        viewed_buffer = self.ledger.buffer_of(viewed.id)
        viewed_complete = self._viewed_complete(media)

        rebuffer = 0.0 if viewed_complete else positive(duration_s - viewed_buffer)
        stepped = self._advance(
            duration_s,
            self.ledger.with_buffers({viewed.id: positive(viewed_buffer - duration_s)}),
            duration_s - rebuffer,
        )
        stepped, playback_started, swiped = stepped._settle(media, params)
        outcome = StepOutcome(
            kind=StepKind.IDLE,
            viewed_video_id=viewed.id,
            rebuffer_s=rebuffer,
            elapsed_s=duration_s,
            playback_started=playback_started,
            swiped=swiped,
        )
        return stepped, outcome

    def _advance(
        self,
        elapsed_s: float,
        ledger: BufferLedger,
        played_gain_s: float,
        downloaded_s: Mapping[str, float] | None = None,
        startup_charged: bool | None = None,
        last_pan_cdn_id: int | None = None,
    ) -> "SessionState":
        # built directly: this runs once per planner rollout node
        return SessionState(
            self.now_s + elapsed_s,
            self.viewing_index,
            ledger,
            self.downloaded_s if downloaded_s is None else downloaded_s,
            self.played_s + played_gain_s,
            self.started,
            self.startup_charged if startup_charged is None else startup_charged,
            self.last_pan_cdn_id if last_pan_cdn_id is None else last_pan_cdn_id,
            self.finished,
        )

    def _settle(self, media: MediaList, params: QoEParams) -> Tuple["SessionState", bool, bool]:
        """Mark playback start and perform a due swipe at the step boundary."""
        state = self
        playback_started = False
        if not state.started and state._playable(media, params):
            state = replace(state, started=True)
            playback_started = True

        if state.played_s < media.watch_of(state.viewing_index) - EPSILON:
            return state, playback_started, False

        if state.viewing_index + 1 >= len(media):
            return replace(state, finished=True), playback_started, True

        leaving = media.video_at(state.viewing_index).id
        downloaded = {video_id: seconds for video_id, seconds in state.downloaded_s.items() if video_id != leaving}
        state = replace(
            state,
            viewing_index=state.viewing_index + 1,
            ledger=state.ledger.without(leaving),
            downloaded_s=downloaded,
            played_s=0.0,
            started=False,
            startup_charged=False,
        )
        if state._playable(media, params):
            state = replace(state, started=True)
            playback_started = True
        return state, playback_started, True

    def _playable(self, media: MediaList, params: QoEParams) -> bool:
        return self.viewed_buffer_s(media) >= params.tau_st_s - EPSILON or self._viewed_complete(media)

    def to_dict(self) -> dict:
        return {
            "now_s": self.now_s,
            "viewing_index": self.viewing_index,
            "ledger": self.ledger.to_dict(),
            "downloaded_s": dict(self.downloaded_s),
            "played_s": self.played_s,
            "started": self.started,
            "startup_charged": self.startup_charged,
            "last_pan_cdn_id": self.last_pan_cdn_id,
            "finished": self.finished,
        }

from dataclasses import dataclass
from typing import List, Tuple

from pirasim.domain.download_target import DownloadTarget
from pirasim.domain.media_list import MediaList
from pirasim.domain.numeric import EPSILON, positive
from pirasim.domain.session_state import SessionState


@dataclass(frozen=True)
class PreloadPolicy:
    """Which videos to fetch next; a fixed input, never optimised.

    The viewed video comes first while its buffer is below ``viewing_target_s``;
    then the next ``prefetch_count`` entries up to ``prefetch_target_s`` each.
    """

    viewing_target_s: float = 10.0
    prefetch_count: int = 2
    prefetch_target_s: float = 4.0

    def download_sequence(self, state: SessionState, media: MediaList) -> Tuple[DownloadTarget, ...]:
        if state.finished:
            return ()
        sequence: List[DownloadTarget] = []

        viewed = media.video_at(state.viewing_index)
        downloaded = state.downloaded_of(viewed.id)
        buffer_s = state.ledger.buffer_of(viewed.id)
        if not viewed.is_complete(downloaded) and buffer_s < self.viewing_target_s + EPSILON:
            target = min(viewed.duration_s, downloaded + positive(self.viewing_target_s - buffer_s))
            sequence.append(DownloadTarget(state.viewing_index, viewed.id, max(target, downloaded + EPSILON)))

        last = min(len(media), state.viewing_index + 1 + self.prefetch_count)
        for index in range(state.viewing_index + 1, last):
            video = media.video_at(index)
            want = min(self.prefetch_target_s, video.duration_s)
            if state.downloaded_of(video.id) < want - EPSILON:
                sequence.append(DownloadTarget(index, video.id, want))

        return tuple(sequence)

    def idle_duration_s(self, state: SessionState, media: MediaList) -> float:
        """How long playback runs before the policy wants data again or the swipe is due."""
        remaining_watch = state.remaining_watch_s(media)
        viewed = media.video_at(state.viewing_index)
        if viewed.is_complete(state.downloaded_of(viewed.id)):
            return remaining_watch
        return min(remaining_watch, positive(state.ledger.buffer_of(viewed.id) - self.viewing_target_s))

    def to_dict(self) -> dict:
        return {
            "viewing_target_s": self.viewing_target_s,
            "prefetch_count": self.prefetch_count,
            "prefetch_target_s": self.prefetch_target_s,
        }

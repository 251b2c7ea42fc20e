from typing import Any, Dict, List, Sequence, Tuple

from pirasim.domain.exceptions import (
    CannotCreateMediaListWithDuplicateVideoIdsException,
    CannotCreateMediaListWithMismatchedWatchDurationsException,
    CannotCreateMediaListWithNonPositiveWatchDurationException,
    CannotCreateMediaListWithOutOfRangeIndexException,
)
from pirasim.domain.video_spec import VideoSpec


class MediaList:
    """The user's ordered playlist with the watch duration of every entry.

    Watch durations may exceed the video duration; the player loops a fully
    downloaded video until the user swipes.
    """

    def __init__(self, videos: Sequence[VideoSpec], watch_duration_s: Sequence[float], current_index: int = 0):
        if len(videos) != len(watch_duration_s):
            raise CannotCreateMediaListWithMismatchedWatchDurationsException()
        if any(watch <= 0 for watch in watch_duration_s):
            raise CannotCreateMediaListWithNonPositiveWatchDurationException()
        ids = [video.id for video in videos]
        if len(set(ids)) != len(ids):
            raise CannotCreateMediaListWithDuplicateVideoIdsException()
        if videos and not 0 <= current_index < len(videos):
            raise CannotCreateMediaListWithOutOfRangeIndexException()
        if not videos and current_index != 0:
            raise CannotCreateMediaListWithOutOfRangeIndexException()

        self._videos: Tuple[VideoSpec, ...] = tuple(videos)
        self._watch_duration_s: Tuple[float, ...] = tuple(float(watch) for watch in watch_duration_s)
        self._current_index = current_index
        self._positions: Dict[str, int] = {video_id: index for index, video_id in enumerate(ids)}

    @property
    def videos(self) -> Tuple[VideoSpec, ...]:
        return self._videos

    @property
    def watch_duration_s(self) -> Tuple[float, ...]:
        return self._watch_duration_s

    @property
    def current_index(self) -> int:
        return self._current_index

    def __len__(self) -> int:
        return len(self._videos)

    def video_at(self, index: int) -> VideoSpec:
        return self._videos[index]

    def watch_of(self, index: int) -> float:
        return self._watch_duration_s[index]

    def index_of(self, video_id: str) -> int:
        return self._positions[video_id]

    def __contains__(self, video_id: object) -> bool:
        return video_id in self._positions

    def needed_content_s(self, index: int) -> float:
        """Content the user actually consumes from entry ``index`` (no looping counted)."""
        return min(self._watch_duration_s[index], self._videos[index].duration_s)

    def total_watch_s(self) -> float:
        return sum(self._watch_duration_s)

    def with_current_index(self, index: int) -> "MediaList":
        return MediaList(self._videos, self._watch_duration_s, index)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MediaList":
        return cls(
            videos=[VideoSpec.from_dict(item) for item in data.get("videos", [])],
            watch_duration_s=[float(watch) for watch in data.get("watch_duration_s", [])],
            current_index=int(data.get("current_index", 0)),
        )

    def to_dict(self) -> dict:
        return {
            "videos": [video.to_dict() for video in self._videos],
            "watch_duration_s": list(self._watch_duration_s),
            "current_index": self._current_index,
        }

    def __repr__(self) -> str:
        ids: List[str] = [video.id for video in self._videos]
        return f"MediaList(videos={ids}, current_index={self._current_index})"

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, MediaList):
            return False
        return (
            self._videos == other._videos
            and self._watch_duration_s == other._watch_duration_s
            and self._current_index == other._current_index
        )

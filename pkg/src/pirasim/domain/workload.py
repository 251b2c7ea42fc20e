from typing import Any

from pirasim.domain.media_list import MediaList


class Workload:
    """
    A media list whose watch durations are the swipe schedule.

    The user leaves entry ``i`` after ``media.watch_of(i)`` seconds of playback;
    ``SessionState`` performs the swipe when the viewed entry reaches that mark.
    """

    def __init__(self, media: MediaList, workload_id: str = "workload"):
        self._media = media
        self._workload_id = workload_id

    @property
    def media(self) -> MediaList:
        return self._media

    @property
    def workload_id(self) -> str:
        return self._workload_id

    @property
    def swipe_count(self) -> int:
        return max(len(self._media) - 1 - self._media.current_index, 0)

    def __len__(self) -> int:
        return len(self._media)

    def to_dict(self) -> dict:
        return {"workload_id": self._workload_id, "videos": len(self._media), "swipes": self.swipe_count}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Workload):
            return False
        return self._media == other._media

    def __repr__(self) -> str:
        return f"Workload(workload_id={self._workload_id!r}, media={self._media!r})"

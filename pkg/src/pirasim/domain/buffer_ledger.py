from types import MappingProxyType
from typing import Dict, Iterable, Mapping

from pirasim.domain.exceptions import (
    CannotCreateBufferLedgerWithNegativeBufferException,
    CannotCreateBufferLedgerWithNonPositiveCapException,
)


class BufferLedger:
    """Seconds of downloaded-but-unplayed content per video, sharing one player cap."""

    __slots__ = ("_buffers", "_player_cap_s", "_total_s")

    def __init__(self, per_video_buffer_s: Mapping[str, float], player_cap_s: float):
        if player_cap_s <= 0:
            raise CannotCreateBufferLedgerWithNonPositiveCapException()
        if any(buffer < 0 for buffer in per_video_buffer_s.values()):
            raise CannotCreateBufferLedgerWithNegativeBufferException()

        self._buffers: Dict[str, float] = dict(per_video_buffer_s)
        self._player_cap_s = float(player_cap_s)
        self._total_s = sum(self._buffers.values())

    @classmethod
    def empty(cls, video_ids: Iterable[str], player_cap_s: float) -> "BufferLedger":
        return cls({video_id: 0.0 for video_id in video_ids}, player_cap_s)

    @property
    def per_video_buffer_s(self) -> Mapping[str, float]:
        return MappingProxyType(self._buffers)

    @property
    def player_cap_s(self) -> float:
        return self._player_cap_s

    @property
    def total_s(self) -> float:
        return self._total_s

    def __contains__(self, video_id: object) -> bool:
        return video_id in self._buffers

    def buffer_of(self, video_id: str) -> float:
        return self._buffers[video_id]

    def others_total_s(self, video_id: str) -> float:
        return sum(buffer for other, buffer in self._buffers.items() if other != video_id)

    def with_buffers(self, updates: Mapping[str, float]) -> "BufferLedger":
        if any(buffer < 0 for buffer in updates.values()):
            raise CannotCreateBufferLedgerWithNegativeBufferException()
        buffers = dict(self._buffers)
        buffers.update(updates)
        # the untouched entries were validated when this ledger was built
        ledger = BufferLedger.__new__(BufferLedger)
        ledger._buffers = buffers
        ledger._player_cap_s = self._player_cap_s
        ledger._total_s = sum(buffers.values())
        return ledger

    def without(self, video_id: str) -> "BufferLedger":
        buffers = {other: buffer for other, buffer in self._buffers.items() if other != video_id}
        return BufferLedger(buffers, self._player_cap_s)

    def to_dict(self) -> dict:
        return {"per_video_buffer_s": dict(self._buffers), "player_cap_s": self._player_cap_s}

    def __eq__(self, other) -> bool:
        if not isinstance(other, BufferLedger):
            return False
        return self._buffers == other._buffers and self._player_cap_s == other._player_cap_s

    def __repr__(self) -> str:
        return f"BufferLedger(per_video_buffer_s={self._buffers}, player_cap_s={self._player_cap_s})"

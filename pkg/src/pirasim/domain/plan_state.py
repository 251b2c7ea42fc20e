from dataclasses import dataclass
from typing import Mapping, Tuple

from pirasim.domain.buffer_ledger import BufferLedger
from pirasim.domain.download_target import DownloadTarget
from pirasim.domain.session_state import SessionState


@dataclass(frozen=True)
class PlanState:
    """What the planner starts its rollouts from."""

    session: SessionState
    download_sequence: Tuple[DownloadTarget, ...]
    predicted_mbps: Mapping[int, float]

    @property
    def ledger(self) -> BufferLedger:
        return self.session.ledger

    @property
    def last_used_pan_cdn_id(self) -> int | None:
        return self.session.last_pan_cdn_id

    @property
    def elapsed_s(self) -> float:
        return self.session.now_s

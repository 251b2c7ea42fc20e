from dataclasses import dataclass

from pirasim.domain.event_kind import EventKind


@dataclass(frozen=True)
class SessionEvent:
    time_s: float
    kind: EventKind
    video_id: str

    def sort_key(self):
        return (self.time_s, self.kind.priority)

    def to_dict(self) -> dict:
        return {"time_s": self.time_s, "kind": self.kind.value, "video_id": self.video_id}

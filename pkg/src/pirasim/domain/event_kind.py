from enum import Enum


class EventKind(str, Enum):
    """Kinds of session events, declared in processing order for equal timestamps."""

    REBUFFER_END = "rebuffer-end"
    RANGE_COMPLETE = "range-complete"
    PROBE_COMPLETE = "probe-complete"
    STARTUP_COMPLETE = "startup-complete"
    SWIPE = "swipe"
    REBUFFER_START = "rebuffer-start"

    @property
    def priority(self) -> int:
        return list(EventKind).index(self)

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value}"

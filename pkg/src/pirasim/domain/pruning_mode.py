from enum import Enum


class PruningMode(str, Enum):
    ON = "on"
    OFF = "off"
    I_ONLY = "i-only"
    II_ONLY = "ii-only"

    @property
    def filters_pan_cdns(self) -> bool:
        return self in (PruningMode.ON, PruningMode.I_ONLY)

    @property
    def filters_ranges(self) -> bool:
        return self in (PruningMode.ON, PruningMode.II_ONLY)

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value}"

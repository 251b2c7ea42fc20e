from dataclasses import dataclass

from pirasim.domain.exceptions import (
    CannotCreatePanCdnClassWithInvalidIdException,
    CannotCreatePanCdnClassWithNegativeCostException,
)


@dataclass(frozen=True)
class PanCdnClass:
    """A priced resource tier. ``cost_coeff`` is charged per megabyte delivered."""

    id: int
    cost_coeff: float
    label: str = ""

    def __post_init__(self):
        if not isinstance(self.id, int) or isinstance(self.id, bool) or self.id < 1:
            raise CannotCreatePanCdnClassWithInvalidIdException()
        if self.cost_coeff < 0:
            raise CannotCreatePanCdnClassWithNegativeCostException()
        if not self.label:
            object.__setattr__(self, "label", f"pan-CDN{self.id}")

    @classmethod
    def from_dict(cls, data: dict) -> "PanCdnClass":
        return cls(id=int(data["id"]), cost_coeff=float(data["cost_coeff"]), label=data.get("label", ""))

    def to_dict(self) -> dict:
        return {"id": self.id, "cost_coeff": self.cost_coeff, "label": self.label}

from typing import Dict, Iterable, Iterator, Sequence, Tuple

from pirasim.domain.exceptions import (
    CannotCreatePanCdnCatalogWithDuplicateIdsException,
    CannotCreatePanCdnCatalogWithoutClassesException,
)
from pirasim.domain.pan_cdn_class import PanCdnClass

DEFAULT_COST_COEFFS = (0.16, 0.12, 0.08, 0.05)


class PanCdnCatalog:
    """The configured pan-CDN classes, indexed by id."""

    def __init__(self, classes: Sequence[PanCdnClass]):
        classes = list(classes)
        if not classes:
            raise CannotCreatePanCdnCatalogWithoutClassesException()
        ids = [pan_cdn.id for pan_cdn in classes]
        if len(set(ids)) != len(ids):
            raise CannotCreatePanCdnCatalogWithDuplicateIdsException()

        self._classes: Dict[int, PanCdnClass] = {pan_cdn.id: pan_cdn for pan_cdn in sorted(classes, key=lambda c: c.id)}

    @classmethod
    def from_costs(cls, cost_coeffs: Sequence[float]) -> "PanCdnCatalog":
        return cls([PanCdnClass(id=index, cost_coeff=float(cost)) for index, cost in enumerate(cost_coeffs, start=1)])

    @classmethod
    def default(cls) -> "PanCdnCatalog":
        return cls.from_costs(DEFAULT_COST_COEFFS)

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(self._classes)

    def get(self, pan_cdn_id: int) -> PanCdnClass:
        try:
            return self._classes[pan_cdn_id]
        except KeyError as e:
            raise KeyError(f"Pan-CDN '{pan_cdn_id}' is not configured") from e

    def cost_of(self, pan_cdn_id: int) -> float:
        return self.get(pan_cdn_id).cost_coeff

    def __contains__(self, pan_cdn_id: object) -> bool:
        return pan_cdn_id in self._classes

    def __iter__(self) -> Iterator[PanCdnClass]:
        return iter(self._classes.values())

    def __len__(self) -> int:
        return len(self._classes)

    def cheapest(self, candidates: Iterable[int]) -> int:
        """Lowest cost coefficient among ``candidates``, lower id on ties."""
        return min(candidates, key=lambda pan_cdn_id: (self.cost_of(pan_cdn_id), pan_cdn_id))

    def tie_break_key(self, pan_cdn_id: int, range_duration_s: float) -> Tuple[float, float, int]:
        # lower cost first, then longer range, then lower id
        return (self.cost_of(pan_cdn_id), -range_duration_s, pan_cdn_id)

    @classmethod
    def from_dict(cls, data: dict) -> "PanCdnCatalog":
        return cls([PanCdnClass.from_dict(item) for item in data["classes"]])

    def to_dict(self) -> dict:
        return {"classes": [pan_cdn.to_dict() for pan_cdn in self]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, PanCdnCatalog):
            return False
        return list(self) == list(other)

    def __repr__(self) -> str:
        return f"PanCdnCatalog(classes={list(self)})"

from dataclasses import dataclass

from pirasim.domain.exceptions import CannotCreateProductionConfigWithInvalidMarginException


@dataclass(frozen=True)
class ProductionConfig:
    margin: float = 1.1
    recovery_buffer_s: float = 5.0
    emergency_cdn_id: int = 1

    def __post_init__(self):
        if self.margin <= 1:
            raise CannotCreateProductionConfigWithInvalidMarginException()
        if self.recovery_buffer_s < 0:
            raise CannotCreateProductionConfigWithInvalidMarginException(
                message="recovery_buffer_s must be nonnegative."
            )

    def to_dict(self) -> dict:
        return {
            "margin": self.margin,
            "recovery_buffer_s": self.recovery_buffer_s,
            "emergency_cdn_id": self.emergency_cdn_id,
        }

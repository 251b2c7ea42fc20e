from dataclasses import dataclass

from pirasim.domain.exceptions import CannotCreateQoeParamsWithInvalidWeightsException


@dataclass(frozen=True)
class QoEParams:
    mu1: float = 2.0
    mu2: float = 0.5
    tau_st_s: float = 2.0
    gamma: float = 0.3
    # False charges only the first range downloaded below the startup threshold
    startup_accumulates: bool = True

    def __post_init__(self):
        if self.mu1 <= 0 or self.mu2 <= 0 or self.tau_st_s <= 0:
            raise CannotCreateQoeParamsWithInvalidWeightsException(
                message="QoE weights mu1, mu2 and the startup threshold must be positive."
            )
        if self.gamma < 0:
            raise CannotCreateQoeParamsWithInvalidWeightsException(message="Cost weight gamma must be nonnegative.")

    def with_gamma(self, gamma: float) -> "QoEParams":
        return QoEParams(self.mu1, self.mu2, self.tau_st_s, gamma, self.startup_accumulates)

    def to_dict(self) -> dict:
        return {
            "mu1": self.mu1,
            "mu2": self.mu2,
            "tau_st_s": self.tau_st_s,
            "gamma": self.gamma,
            "startup_accumulates": self.startup_accumulates,
        }

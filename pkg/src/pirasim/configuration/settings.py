"""
Layered experiment settings.

Defaults live on ``Settings``; ``load_config`` lays a flat ``key=value`` file,
``PIRASIM_*`` environment variables and explicit overrides on top, in that order.
"""

import os
from dataclasses import asdict, dataclass, field, fields, replace
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Mapping, Tuple

from dotenv import dotenv_values

from pirasim.domain import (
    LinkConfig,
    PanCdnCatalog,
    Period,
    PlanningConfig,
    PredictorConfig,
    PreloadPolicy,
    ProductionConfig,
    PruningMode,
    QoEParams,
    SynthConfig,
    WorkloadConfig,
)
from pirasim.domain.exceptions import (
    CannotLoadConfigWithInvalidValueException,
    CannotLoadConfigWithUnknownKeyException,
    DomainException,
)

ENV_PREFIX = "PIRASIM_"


def _per_cdn(*values: float) -> Dict[int, float]:
    return {pan_cdn_id: value for pan_cdn_id, value in enumerate(values, start=1)}


@dataclass(frozen=True)
class Settings:
    # qoe
    mu1: float = 2.0
    mu2: float = 0.5
    tau_st_s: float = 2.0
    gamma: float = 0.3
    startup_accumulates: bool = True
    player_cap_s: float = 30.0
    # catalog
    cost_coeffs: Tuple[float, ...] = (0.16, 0.12, 0.08, 0.05)
    chunk_duration_s: float = 4.0
    # preload policy
    viewing_target_s: float = 10.0
    prefetch_count: int = 2
    prefetch_target_s: float = 4.0
    # predictor
    window_w: int = 5
    degradation_alpha: float = 0.8
    switch_setup_rtt_mult: float = 1.5
    avg_rtt_s: float = 0.05
    probe_interval_s: float = 30.0
    probe_duration_s: float = 0.5
    probe_charged: bool = True
    prior_mbps: Mapping[int, float] = field(default_factory=lambda: _per_cdn(25.0, 22.0, 18.0, 14.0))
    # planning
    horizon_n: int = 4
    candidate_ranges_s: Tuple[float, ...] = (1.0, 2.0, 3.0, 4.0)
    pruning: PruningMode = PruningMode.ON
    range_ratio_steps: Tuple[Tuple[float, float], ...] = ((0.0, 1.0), (1.0, 2.0), (2.0, 3.0), (4.0, 4.0))
    # production baseline
    margin: float = 1.1
    recovery_buffer_s: float = 5.0
    emergency_cdn_id: int = 1
    # links
    pool_idle_timeout_s: float = 180.0
    # trace synthesis
    base_mbps: Mapping[int, float] = field(default_factory=lambda: _per_cdn(25.0, 22.0, 18.0, 14.0))
    offpeak_multipliers: Mapping[int, float] = field(default_factory=lambda: _per_cdn(1.0, 1.0, 1.0, 1.0))
    peak_multipliers: Mapping[int, float] = field(default_factory=lambda: _per_cdn(0.9, 0.85, 0.8, 0.8))
    evening_multipliers: Mapping[int, float] = field(default_factory=lambda: _per_cdn(0.8, 0.7, 0.5, 0.7))
    ar_coeff: float = 0.9
    noise_sigma: float = 0.35
    trace_length_s: int = 3600
    # workload generation
    video_count: int = 40
    short_fraction: float = 0.73
    short_range_s: Tuple[float, ...] = (5.0, 30.0)
    long_range_s: Tuple[float, ...] = (30.0, 120.0)
    bitrates_mbps: Tuple[float, ...] = (2.0, 4.0, 8.0)
    watch_median_s: float = 9.0
    watch_sigma: float = 0.8
    cache_probability: Mapping[int, float] = field(default_factory=lambda: _per_cdn(1.0, 1.0, 1.0, 1.0))
    # experiment
    seed: int = 2024
    replications: int = 50
    workers: int = 4
    periods: Tuple[Period, ...] = (Period.OFF_PEAK, Period.PEAK, Period.EVENING_PEAK)
    strategies: Tuple[str, ...] = ("pira", "production", "oracle", "pure-1", "pure-4")

    @classmethod
    def keys(cls) -> Tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def with_values(self, **values: Any) -> "Settings":
        return replace(self, **values)

    def catalog(self) -> PanCdnCatalog:
        return PanCdnCatalog.from_costs(self.cost_coeffs)

    def qoe_params(self) -> QoEParams:
        return QoEParams(self.mu1, self.mu2, self.tau_st_s, self.gamma, self.startup_accumulates)

    def preload_policy(self) -> PreloadPolicy:
        return PreloadPolicy(self.viewing_target_s, self.prefetch_count, self.prefetch_target_s)

    def predictor_config(self) -> PredictorConfig:
        return PredictorConfig(
            window_w=self.window_w,
            degradation_alpha=self.degradation_alpha,
            switch_setup_rtt_mult=self.switch_setup_rtt_mult,
            avg_rtt_s=self.avg_rtt_s,
            probe_interval_s=self.probe_interval_s,
            probe_duration_s=self.probe_duration_s,
            probe_charged=self.probe_charged,
            prior_mbps=dict(self.prior_mbps),
        )

    def planning_config(self) -> PlanningConfig:
        return PlanningConfig(
            horizon_n=self.horizon_n,
            candidate_ranges_s=self.candidate_ranges_s,
            pruning=self.pruning,
            range_ratio_steps=self.range_ratio_steps,
            chunk_duration_s=self.chunk_duration_s,
        )

    def production_config(self) -> ProductionConfig:
        return ProductionConfig(self.margin, self.recovery_buffer_s, self.emergency_cdn_id)

    def link_config(self) -> LinkConfig:
        return LinkConfig(
            pool_idle_timeout_s=self.pool_idle_timeout_s,
            degradation_alpha=self.degradation_alpha,
            setup_s=self.switch_setup_rtt_mult * self.avg_rtt_s,
        )

    def synth_config(self, period: Period, seed: int | None = None) -> SynthConfig:
        return SynthConfig(
            period=period,
            base_mbps=dict(self.base_mbps),
            period_multipliers={
                Period.OFF_PEAK: dict(self.offpeak_multipliers),
                Period.PEAK: dict(self.peak_multipliers),
                Period.EVENING_PEAK: dict(self.evening_multipliers),
            },
            ar_coeff=self.ar_coeff,
            noise_sigma=self.noise_sigma,
            length_s=self.trace_length_s,
            seed=self.seed if seed is None else seed,
        )

    def workload_config(self, seed: int | None = None) -> WorkloadConfig:
        return WorkloadConfig(
            video_count=self.video_count,
            short_fraction=self.short_fraction,
            short_range_s=(self.short_range_s[0], self.short_range_s[-1]),
            long_range_s=(self.long_range_s[0], self.long_range_s[-1]),
            bitrates_mbps=self.bitrates_mbps,
            watch_median_s=self.watch_median_s,
            watch_sigma=self.watch_sigma,
            cache_probability=dict(self.cache_probability),
            chunk_duration_s=self.chunk_duration_s,
            seed=self.seed if seed is None else seed,
        )

    def replication_seeds(self) -> Tuple[int, ...]:
        return tuple(range(self.seed, self.seed + self.replications))

    def validate(self) -> "Settings":
        """
        Build every derived config once so bad values fail at load time.

        Raises:
            CannotLoadConfigWithInvalidValueException: Naming the first failing group.
        """
        builders = {
            "catalog": self.catalog,
            "qoe": self.qoe_params,
            "predictor": self.predictor_config,
            "planning": self.planning_config,
            "production": self.production_config,
            "link": self.link_config,
            "synthesis": lambda: self.synth_config(Period.OFF_PEAK),
            "workload": self.workload_config,
        }
        for group, build in builders.items():
            try:
                build()
            except (DomainException, ValueError) as e:
                raise CannotLoadConfigWithInvalidValueException(
                    message=f"Invalid {group} settings: {getattr(e, 'message', str(e))}"
                ) from e
        if self.replications < 1 or self.workers < 1 or self.prefetch_count < 0 or self.player_cap_s <= 0:
            raise CannotLoadConfigWithInvalidValueException(
                message=(
                    "replications and workers must be at least 1, prefetch_count nonnegative, "
                    "player_cap_s positive."
                )
            )
        if set(self.cache_probability) != set(self.catalog().ids):
            raise CannotLoadConfigWithInvalidValueException(
                message="cache_probability must name exactly the configured pan-CDN ids."
            )
        return self

    def to_dict(self) -> dict:
        return {key: _jsonable(value) for key, value in asdict(self).items()}


def _jsonable(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Mapping):
        return {str(key): _jsonable(item) for key, item in sorted(value.items())}
    if isinstance(value, (tuple, list)):
        return [_jsonable(item) for item in value]
    return value


_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _parse_bool(raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ValueError(f"expected a boolean, got '{raw}'")


def _parse_pairs(raw: str) -> Tuple[Tuple[float, float], ...]:
    pairs = []
    for item in _split(raw):
        left, sep, right = item.partition(":")
        if not sep:
            raise ValueError(f"expected '<key>:<value>', got '{item}'")
        pairs.append((float(left), float(right)))
    return tuple(pairs)


def _split(raw: str) -> list:
    return [item.strip() for item in raw.split(",") if item.strip()]


def parse_value(key: str, raw: str) -> Any:
    """
    Convert a raw string to the type of the default of ``key``.

    Lists are comma separated; per-pan-CDN maps are ``1:25,2:22``.

    Raises:
        CannotLoadConfigWithUnknownKeyException: If ``key`` is not a setting.
        CannotLoadConfigWithInvalidValueException: If ``raw`` does not parse.
    """
    defaults = _defaults()
    if key not in defaults:
        raise CannotLoadConfigWithUnknownKeyException(message=f"Unknown configuration key '{key}'.")
    default = defaults[key]
    try:
        if isinstance(default, bool):
            return _parse_bool(raw)
        if isinstance(default, Enum):
            return type(default)(raw.strip())
        if isinstance(default, int):
            return int(raw)
        if isinstance(default, float):
            return float(raw)
        if isinstance(default, Mapping):
            return {int(pan_cdn_id): value for pan_cdn_id, value in _parse_pairs(raw)}
        if key == "range_ratio_steps":
            return _parse_pairs(raw)
        if key == "periods":
            return tuple(Period(item) for item in _split(raw))
        if key == "strategies":
            return tuple(_split(raw))
        return tuple(float(item) for item in _split(raw))
    except ValueError as e:
        raise CannotLoadConfigWithInvalidValueException(message=f"Invalid value for '{key}': {e}") from e


def _defaults() -> Dict[str, Any]:
    defaults = Settings()
    return {key: getattr(defaults, key) for key in Settings.keys()}


def _normalize_key(key: str) -> str:
    return key.strip().lower().replace("-", "_")


def load_config(
    path: str | Path | None = None,
    overrides: Mapping[str, Any] | None = None,
    environ: Mapping[str, str] | None = None,
) -> Settings:
    """
    Resolve settings: defaults, then the config file, then ``PIRASIM_*`` variables, then ``overrides``.

    Args:
        path: Optional flat ``key=value`` file; ``#`` starts a comment.
        overrides: Typed values or raw strings, typically from CLI flags; ``None`` values are skipped.
        environ: Environment to read; defaults to ``os.environ``.

    Returns:
        Settings: validated settings.

    Raises:
        FileNotFoundError: If ``path`` does not exist.
        CannotLoadConfigWithUnknownKeyException: Naming the unknown key.
        CannotLoadConfigWithInvalidValueException: Naming the key with a bad value.
    """
    values: Dict[str, Any] = {}

    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise FileNotFoundError(f"Config file not found: {path}")
        for key, raw in dotenv_values(path).items():
            key = _normalize_key(key)
            if raw is None:
                raise CannotLoadConfigWithInvalidValueException(message=f"Missing value for '{key}' in {path}.")
            values[key] = parse_value(key, raw)

    environ = os.environ if environ is None else environ
    for name, raw in sorted(environ.items()):
        if name.startswith(ENV_PREFIX):
            key = _normalize_key(name[len(ENV_PREFIX) :])
            values[key] = parse_value(key, raw)

    for key, value in (overrides or {}).items():
        if value is None:
            continue
        key = _normalize_key(key)
        values[key] = parse_value(key, value) if isinstance(value, str) else _check_override(key, value)

    return Settings(**values).validate()


def _check_override(key: str, value: Any) -> Any:
    if key not in Settings.keys():
        raise CannotLoadConfigWithUnknownKeyException(message=f"Unknown configuration key '{key}'.")
    return value

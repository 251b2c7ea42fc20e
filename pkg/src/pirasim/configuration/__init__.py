from pirasim.configuration.composition import (
    BASE_STRATEGIES,
    build_runner,
    build_simulator,
    build_strategy,
    is_strategy_name,
)
from pirasim.configuration.logging_setup import STDERR_HANDLER_NAME, configure_logging
from pirasim.configuration.settings import ENV_PREFIX, Settings, load_config, parse_value

__all__ = [
    "Settings",
    "load_config",
    "parse_value",
    "ENV_PREFIX",
    "configure_logging",
    "STDERR_HANDLER_NAME",
    "BASE_STRATEGIES",
    "is_strategy_name",
    "build_simulator",
    "build_strategy",
    "build_runner",
]

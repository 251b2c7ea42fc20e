import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"
LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
STDERR_HANDLER_NAME = "pirasim.stderr"


def configure_logging(level: str | int = "WARNING") -> logging.Logger:
    """
    Send ``pirasim`` records to stderr at ``level``.

    Calling again reuses the same handler and points it at the current ``sys.stderr``.
    Records still propagate, so handlers installed on the root logger see them too.
    """
    logger = logging.getLogger("pirasim")
    logger.setLevel(level.upper() if isinstance(level, str) else level)
    handler = next((handler for handler in logger.handlers if handler.get_name() == STDERR_HANDLER_NAME), None)
    if handler is None:
        handler = logging.StreamHandler(sys.stderr)
        handler.set_name(STDERR_HANDLER_NAME)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    else:
        handler.setStream(sys.stderr)
    return logger

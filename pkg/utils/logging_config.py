"""
utils/logging_config.py

Logging setup shared by the library, the experiment runners and the CLI.
"""

import functools
import logging
import sys
import time
from typing import Any, Callable, Optional

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

_configured = False


def setup_logging(level: str = "INFO", stream=None) -> None:
    """Configure the root logger once; later calls only adjust the level."""
    global _configured
    root = logging.getLogger()
    root.setLevel(getattr(logging, str(level).upper(), logging.INFO))
    if _configured:
        return

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    _configured = True


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def log_execution_time(logger: Optional[logging.Logger] = None) -> Callable:
    """Decorator that logs the wall time of each call at DEBUG level."""

    def decorator(func: Callable) -> Callable:
        log = logger or logging.getLogger(func.__module__)

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed = time.perf_counter() - start
                log.debug(f"{func.__qualname__} took {elapsed:.3f}s",
                          extra={"elapsed_s": elapsed})

        return wrapper

    return decorator

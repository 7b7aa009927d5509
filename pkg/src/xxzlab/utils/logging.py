"""Logging setup."""

import sys
from typing import Any, Optional, Union

from loguru import logger

from ..constants import DEFAULT_LOG_FORMAT
from ..types import LogLevel


def setup_logging(
    level: Union[LogLevel, str] = LogLevel.WARNING,
    fmt: str = DEFAULT_LOG_FORMAT,
    sink: Optional[Any] = None,
) -> int:
    """Replace loguru's default handler with a single configured sink.

    Args:
        level: Minimum level to emit
        fmt: loguru format string
        sink: Destination, stderr by default

    Returns:
        int: Handler id returned by loguru
    """
    logger.remove()
    value = level.value if isinstance(level, LogLevel) else str(level).upper()
    return logger.add(sink if sink is not None else sys.stderr, level=value, format=fmt)

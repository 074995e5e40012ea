"""Contains logging related utility functions.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import TextIO

LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"


def configure(
    log_level: int,
    log_path: Path | None = None,
    prefix: str | None = "froblink",
    stream: TextIO | None = None,
) -> None:
    """Configure the froblink loggers.

    Reports are written to stdout, so console logs go to ``stream`` (stderr by
    default). Calling this again replaces the handlers of the previous call.

    Args:
        log_level: The desired verbosity level.
        log_path: The path to write logs to.
        prefix: The logger to configure; None configures the root logger.
        stream: Console stream.
    """
    logger = logging.getLogger(prefix)

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    for filter in list(logger.filters):
        logger.removeFilter(filter)

    logger.setLevel(log_level)

    formatter = logging.Formatter(LOG_FORMAT)

    console_handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_path is not None:
        file_handler = logging.FileHandler(log_path, mode="w")
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

"""
Logging for the engine and the CLI.

All loggers live under "dmod." and share one handler on stderr, so stdout
carries nothing but reports and JSON. The level comes from DMOD_LOG_LEVEL
(default WARNING) and can be raised with -v/--verbose.
"""

import logging
import os
import sys

ROOT_LOGGER = "dmod"

LOG_FORMAT = "[%(asctime)s] %(levelname)-8s [%(name)s] %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class StderrOnlyHandler(logging.StreamHandler):
    """Stream handler pinned to stderr."""

    def __init__(self):
        super().__init__(stream=sys.stderr)


def setup_logging(name: str = ROOT_LOGGER) -> logging.Logger:
    """
    Return the named logger, installing the "dmod" handler on first use.

    Module loggers propagate into "dmod" and never reach the global root
    logger, so set_level() on "dmod" governs the whole engine.

    Environment Variables:
        DMOD_LOG_LEVEL: DEBUG, INFO, WARNING or ERROR (default WARNING)
    """
    root = logging.getLogger(ROOT_LOGGER)

    if not root.handlers:
        level_name = os.environ.get("DMOD_LOG_LEVEL", "WARNING").upper()
        root.setLevel(getattr(logging, level_name, logging.WARNING))

        handler = StderrOnlyHandler()
        handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
        root.addHandler(handler)
        root.propagate = False

    return logging.getLogger(name)


def set_level(level: int) -> None:
    """Override the engine level (-v gives INFO, -vv DEBUG)"""
    setup_logging().setLevel(level)


def get_logger(module_name: str) -> logging.Logger:
    """
    Logger for one engine module.

    Example:
        logger = get_logger("annihilator.kappa")
        logger.info("d=2: m^(d)=3")
    """
    return setup_logging(f"{ROOT_LOGGER}.{module_name}")

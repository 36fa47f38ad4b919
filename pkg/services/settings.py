"""Runtime settings, read once from the environment (and a local .env).

All values are module-level constants so callers and tests can patch them.
"""
from __future__ import annotations

import logging
import os
from typing import Optional

from dotenv import load_dotenv

from utils.exact_poly import ROUNDING_MODES

load_dotenv()

logger = logging.getLogger(__name__)

PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer; using %d", name, raw, default)
        return default
    if value < minimum:
        logger.warning("%s=%d is below %d; using %d", name, value, minimum, default)
        return default
    return value


def _optional_int_env(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        value = -1
    if value < 0:
        logger.warning("%s=%r is not a nonnegative integer; leaving it unset", name, raw)
        return None
    return value


MAX_DENOMINATION = _int_env("QUASICOIN_MAX_DENOMINATION", 2**32 - 1, 1)
MAX_COINS = _int_env("QUASICOIN_MAX_COINS", 16, 1)
MAX_PERIOD = _int_env("QUASICOIN_MAX_PERIOD", 200_000, 1)
EXTRA_CHECKS = _optional_int_env("QUASICOIN_EXTRA_CHECKS")  # None: one per coin
DECIMAL_PLACES = _int_env("QUASICOIN_DECIMAL_PLACES", 4, 0)
WORKERS = _int_env("QUASICOIN_WORKERS", 1, 1)
MAX_AMOUNT = _int_env("QUASICOIN_MAX_AMOUNT", 10_000_000, 1)

ROUNDING = (os.getenv("QUASICOIN_ROUNDING") or "half-even").strip().lower()
if ROUNDING not in ROUNDING_MODES:
    logger.warning("QUASICOIN_ROUNDING=%r is not one of %s; using half-even", ROUNDING, ROUNDING_MODES)
    ROUNDING = "half-even"

GOLDEN_DIR = os.getenv("QUASICOIN_GOLDEN_DIR") or os.path.join(PROJECT_ROOT, "golden")
LOG_LEVEL = (os.getenv("QUASICOIN_LOG_LEVEL") or "WARNING").strip().upper()

LOGGING_CONFIG = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {"standard": {"format": "%(asctime)s | %(levelname)s | %(name)s | %(message)s"}},
    # stdout carries results only
    "handlers": {"console": {"class": "logging.StreamHandler", "formatter": "standard", "level": "DEBUG", "stream": "ext://sys.stderr"}},
    "loggers": {
        "": {"handlers": ["console"], "level": LOG_LEVEL},
    },
}

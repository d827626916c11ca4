"""
Runtime configuration for jcolour.

Values come from the environment (a local ``.env`` file is honoured) and
fall back to the desk-scale defaults the solvers are tuned for.
"""

import os

from dotenv import load_dotenv

load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


LOG_LEVEL = os.getenv("JCOLOUR_LOG_LEVEL", "INFO").upper()

# Structural ceiling for any Graph value
MAX_STRUCTURAL_ORDER = _int_env("JCOLOUR_MAX_STRUCTURAL_ORDER", 64)

# Exhaustive solver caps
MAX_PROFILE_ORDER = _int_env("JCOLOUR_MAX_PROFILE_ORDER", 12)
MAX_SWEEP_ORDER = _int_env("JCOLOUR_MAX_SWEEP_ORDER", 12)
NAIVE_MAX_ORDER = _int_env("JCOLOUR_NAIVE_MAX_ORDER", 8)
MAX_BONDING_EDGES = _int_env("JCOLOUR_MAX_BONDING_EDGES", 21)

# Harness
DEFAULT_WORKERS = _int_env("JCOLOUR_WORKERS", 1)
CLAIM_TIME_LIMIT = float(os.getenv("JCOLOUR_CLAIM_TIME_LIMIT", "60"))

# Profile cache
DEFAULT_CACHE_PATH = os.getenv("JCOLOUR_CACHE_PATH", "data/profile_cache.db")

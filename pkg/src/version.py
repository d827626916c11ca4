"""
Version information for jcolour.

SOLVER_REVISION is part of every profile-cache key; bump it whenever a
solver change could alter a cached result.
"""

import subprocess
from functools import lru_cache

__version__ = "1.0.0"

VERSION_NAME = "Exact J / J* solvers + claim harness"

BUILD_DATE = "2026-10-18"

SOLVER_REVISION = 1


@lru_cache(maxsize=1)
def get_git_info() -> dict:
    """
    Get git commit information for the working tree, if any.

    Returns:
        dict with commit_short and branch ("unknown" outside a checkout)
    """
    try:
        commit_short = subprocess.check_output(
            ["git", "rev-parse", "--short", "HEAD"],
            stderr=subprocess.DEVNULL
        ).decode().strip()
        branch = subprocess.check_output(
            ["git", "rev-parse", "--abbrev-ref", "HEAD"],
            stderr=subprocess.DEVNULL
        ).decode().strip()
        return {"commit_short": commit_short, "branch": branch}
    except (subprocess.CalledProcessError, FileNotFoundError):
        return {"commit_short": "unknown", "branch": "unknown"}


def get_version_info() -> dict:
    """
    Get complete version information.

    Returns:
        dict with version, name, build date, solver revision and git info
    """
    git_info = get_git_info()
    return {
        "version": __version__,
        "name": VERSION_NAME,
        "build_date": BUILD_DATE,
        "solver_revision": SOLVER_REVISION,
        "git": git_info,
        "display": f"v{__version__} ({git_info['commit_short']})"
    }

"""
SQLite cache for J-profiles.
"""

from .cache import ProfileCache
from .models import CacheStats, ProfileEntry, init_database

__all__ = ["ProfileCache", "CacheStats", "ProfileEntry", "init_database"]

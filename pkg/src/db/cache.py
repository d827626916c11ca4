"""
Cache manager for J-profiles.

Profiles are keyed by the graph6 encoding of the graph, the rainbow mode and
the solver revision, so entries written by an older solver are never served.
"""

import logging
import os
import sqlite3
import time
from typing import Optional

from src.graph.core import Graph
from src.graph.formats import GraphFormat, serialize_graph
from src.rainbow.neighbourhood import RainbowMode
from src.rainbow.solver import JProfile, j_profile
from src.settings import DEFAULT_CACHE_PATH
from src.version import SOLVER_REVISION

from .models import CacheStats, ProfileEntry, init_database

logger = logging.getLogger(__name__)


class ProfileCache:
    """
    Stores JProfiles in SQLite.

    Usage:
        with ProfileCache("data/profile_cache.db") as cache:
            profile = cache.get_or_compute(graph, RainbowMode.ALL_VERTICES)
    """

    def __init__(self, db_path: Optional[str] = None, revision: int = SOLVER_REVISION):
        self.db_path = db_path or DEFAULT_CACHE_PATH
        self.revision = revision
        self._conn: Optional[sqlite3.Connection] = None
        self._ensure_connection()

    def _ensure_connection(self) -> sqlite3.Connection:
        if self._conn is None:
            self._conn = init_database(self.db_path)
            logger.debug(f"Profile cache opened at {self.db_path}")
        return self._conn

    @property
    def conn(self) -> sqlite3.Connection:
        return self._ensure_connection()

    def close(self):
        if self._conn:
            self._conn.close()
            self._conn = None

    @staticmethod
    def graph_key(graph: Graph) -> str:
        """graph6 text of the graph (empty string for the graph on 0 vertices)."""
        if graph.order == 0:
            return ""
        return serialize_graph(graph, GraphFormat.GRAPH6).strip()

    def get(self, graph: Graph, mode) -> Optional[JProfile]:
        """
        Retrieve a cached profile.

        Returns:
            JProfile if present for the current revision, None otherwise
        """
        mode = RainbowMode(mode)
        key = self.graph_key(graph)
        cursor = self.conn.cursor()
        cursor.execute(
            """
            SELECT * FROM profile_cache
            WHERE graph6 = ? AND mode = ? AND solver_revision = ?
            """,
            (key, mode.value, self.revision),
        )
        row = cursor.fetchone()

        if row is None:
            self._increment("misses")
            logger.debug(f"Cache MISS: {key} mode={mode.value}")
            return None

        self._increment("hits")
        logger.debug(f"Cache HIT: {key} mode={mode.value}")
        return JProfile.model_validate_json(ProfileEntry.from_row(row).profile_json)

    def set(self, graph: Graph, profile: JProfile, computation_time: Optional[float] = None) -> int:
        """Store a profile, replacing any entry with the same key."""
        cursor = self.conn.cursor()
        cursor.execute(
            """
            INSERT OR REPLACE INTO profile_cache (
                graph6, mode, solver_revision, graph_order, graph_size,
                j_value, profile_json, computation_time
            ) VALUES (?, ?, ?, ?, ?, ?, ?, ?)
            """,
            (
                self.graph_key(graph),
                profile.mode.value,
                self.revision,
                graph.order,
                graph.size,
                profile.j_value,
                profile.model_dump_json(),
                computation_time,
            ),
        )
        self.conn.commit()
        return cursor.lastrowid

    def get_or_compute(self, graph: Graph, mode, max_order: Optional[int] = None) -> JProfile:
        """Cached profile, computing and storing it on a miss."""
        cached = self.get(graph, mode)
        if cached is not None:
            return cached
        start = time.time()
        profile = j_profile(graph, mode, max_order=max_order)
        self.set(graph, profile, time.time() - start)
        return profile

    def clear_all(self) -> int:
        """
        Clear all entries and reset the counters.

        Returns:
            Number of entries removed
        """
        cursor = self.conn.cursor()
        cursor.execute("DELETE FROM profile_cache")
        count = cursor.rowcount
        cursor.execute("UPDATE cache_stats SET hits = 0, misses = 0")
        self.conn.commit()
        logger.warning(f"Cache CLEAR: removed all {count} entries")
        return count

    def purge_stale(self) -> int:
        """Remove entries written by other solver revisions."""
        cursor = self.conn.cursor()
        cursor.execute("DELETE FROM profile_cache WHERE solver_revision != ?", (self.revision,))
        self.conn.commit()
        count = cursor.rowcount
        if count > 0:
            logger.info(f"Cache PURGE: removed {count} stale entries")
        return count

    def get_stats(self) -> CacheStats:
        cursor = self.conn.cursor()

        cursor.execute("SELECT hits, misses FROM cache_stats LIMIT 1")
        stats_row = cursor.fetchone()
        hits = stats_row["hits"] if stats_row else 0
        misses = stats_row["misses"] if stats_row else 0

        cursor.execute("SELECT COUNT(*) FROM profile_cache")
        total_entries = cursor.fetchone()[0]

        cursor.execute(
            "SELECT mode, COUNT(*) FROM profile_cache WHERE solver_revision = ? GROUP BY mode",
            (self.revision,),
        )
        by_mode = {row[0]: row[1] for row in cursor.fetchall()}

        cursor.execute("SELECT COUNT(*) FROM profile_cache WHERE solver_revision != ?", (self.revision,))
        stale = cursor.fetchone()[0]

        db_size = os.path.getsize(self.db_path) if os.path.exists(self.db_path) else 0
        total_requests = hits + misses

        return CacheStats(
            total_entries=total_entries,
            total_hits=hits,
            total_misses=misses,
            hit_rate=hits / total_requests if total_requests > 0 else 0.0,
            cache_size_bytes=db_size,
            entries_by_mode=by_mode,
            stale_entries=stale,
        )

    def _increment(self, column: str):
        cursor = self.conn.cursor()
        cursor.execute(
            f"UPDATE cache_stats SET {column} = {column} + 1, updated_at = datetime('now')"
        )
        self.conn.commit()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

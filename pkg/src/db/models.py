"""
Database models for the J-profile cache.

Defines the SQLite table schema and the row/statistics records.
"""

import sqlite3
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Optional

from src.settings import DEFAULT_CACHE_PATH


@dataclass
class ProfileEntry:
    """A cached JProfile, keyed by graph6 text, mode and solver revision."""

    id: Optional[int] = None
    graph6: str = ""
    mode: str = ""
    solver_revision: int = 0
    order: int = 0
    size: int = 0
    j_value: Optional[int] = None

    # JProfile as JSON
    profile_json: str = ""

    computation_time: Optional[float] = None
    created_at: Optional[datetime] = None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "graph6": self.graph6,
            "mode": self.mode,
            "solver_revision": self.solver_revision,
            "order": self.order,
            "size": self.size,
            "j_value": self.j_value,
            "computation_time": self.computation_time,
            "created_at": self.created_at.isoformat() if self.created_at else None,
        }

    @classmethod
    def from_row(cls, row: sqlite3.Row) -> "ProfileEntry":
        """Create from SQLite row."""
        return cls(
            id=row["id"],
            graph6=row["graph6"],
            mode=row["mode"],
            solver_revision=row["solver_revision"],
            order=row["graph_order"],
            size=row["graph_size"],
            j_value=row["j_value"],
            profile_json=row["profile_json"],
            computation_time=row["computation_time"],
            created_at=datetime.fromisoformat(row["created_at"]) if row["created_at"] else None,
        )


@dataclass
class CacheStats:
    """Cache statistics."""

    total_entries: int = 0
    total_hits: int = 0
    total_misses: int = 0
    hit_rate: float = 0.0
    cache_size_bytes: int = 0
    entries_by_mode: dict = field(default_factory=dict)
    stale_entries: int = 0

    def to_dict(self) -> dict:
        return {
            "total_entries": self.total_entries,
            "total_hits": self.total_hits,
            "total_misses": self.total_misses,
            "hit_rate": round(self.hit_rate, 4),
            "cache_size_bytes": self.cache_size_bytes,
            "entries_by_mode": self.entries_by_mode,
            "stale_entries": self.stale_entries,
        }


# SQL Schema
CREATE_TABLE_SQL = """
CREATE TABLE IF NOT EXISTS profile_cache (
    id               INTEGER PRIMARY KEY AUTOINCREMENT,
    graph6           TEXT NOT NULL,
    mode             TEXT NOT NULL,
    solver_revision  INTEGER NOT NULL,

    graph_order      INTEGER NOT NULL,
    graph_size       INTEGER NOT NULL,
    j_value          INTEGER,
    profile_json     TEXT NOT NULL,
    computation_time REAL,

    created_at       TEXT DEFAULT (datetime('now')),

    -- same graph + mode + solver revision = one record
    UNIQUE(graph6, mode, solver_revision)
);
"""

CREATE_INDEXES_SQL = [
    "CREATE INDEX IF NOT EXISTS idx_graph6 ON profile_cache(graph6);",
    "CREATE INDEX IF NOT EXISTS idx_revision ON profile_cache(solver_revision);",
]

# Hit/miss counters
CREATE_STATS_TABLE_SQL = """
CREATE TABLE IF NOT EXISTS cache_stats (
    id          INTEGER PRIMARY KEY AUTOINCREMENT,
    hits        INTEGER DEFAULT 0,
    misses      INTEGER DEFAULT 0,
    updated_at  TEXT DEFAULT (datetime('now'))
);
"""


def init_database(db_path: str = DEFAULT_CACHE_PATH) -> sqlite3.Connection:
    """
    Initialize the database with required tables and indexes.

    Args:
        db_path: Path to the SQLite database file

    Returns:
        SQLite connection with row_factory set
    """
    Path(db_path).parent.mkdir(parents=True, exist_ok=True)

    conn = sqlite3.connect(db_path)
    conn.row_factory = sqlite3.Row

    cursor = conn.cursor()
    cursor.execute(CREATE_TABLE_SQL)
    for index_sql in CREATE_INDEXES_SQL:
        cursor.execute(index_sql)
    cursor.execute(CREATE_STATS_TABLE_SQL)

    cursor.execute("SELECT COUNT(*) FROM cache_stats")
    if cursor.fetchone()[0] == 0:
        cursor.execute("INSERT INTO cache_stats (hits, misses) VALUES (0, 0)")

    conn.commit()
    return conn

"""
Unit tests for the J-profile cache.

Tests cover:
- ProfileCache set/get and get_or_compute
- Solver-revision keying and stale purging
- Hit/miss statistics
- Database initialization
"""

import os
import tempfile

import pytest

from src.db import CacheStats, ProfileCache
from src.db.models import init_database
from src.graph.families import cycle, null, star
from src.rainbow import RainbowMode, j_profile


@pytest.fixture
def temp_db():
    """Create a temporary database for testing."""
    with tempfile.NamedTemporaryFile(suffix=".db", delete=False) as f:
        db_path = f.name
    yield db_path
    if os.path.exists(db_path):
        os.unlink(db_path)


class TestProfileCache:
    """Tests for ProfileCache."""

    @pytest.fixture
    def cache(self, temp_db):
        manager = ProfileCache(db_path=temp_db, revision=1)
        yield manager
        manager.close()

    def test_set_and_get(self, cache):
        profile = j_profile(cycle(6), RainbowMode.ALL_VERTICES)
        cache.set(cycle(6), profile, computation_time=0.01)

        cached = cache.get(cycle(6), RainbowMode.ALL_VERTICES)
        assert cached is not None
        assert cached.j_value == 3
        assert cached.feasible_k == [2, 3]
        assert cached.witnesses[3].colour_of == (1, 2, 3, 1, 2, 3)

    def test_modes_are_separate(self, cache):
        cache.set(star(3), j_profile(star(3), RainbowMode.ALL_VERTICES))
        assert cache.get(star(3), RainbowMode.INTERNAL_ONLY) is None
        assert cache.get(star(3), "all_vertices").j_value == 2

    def test_get_nonexistent(self, cache):
        """Test that a miss returns None and is counted."""
        assert cache.get(cycle(5), RainbowMode.ALL_VERTICES) is None
        assert cache.get_stats().total_misses == 1

    def test_get_or_compute(self, cache):
        first = cache.get_or_compute(star(4), RainbowMode.INTERNAL_ONLY)
        second = cache.get_or_compute(star(4), RainbowMode.INTERNAL_ONLY)
        assert first.j_value == second.j_value == 5
        stats = cache.get_stats()
        assert stats.total_entries == 1
        assert stats.total_hits == 1
        assert stats.total_misses == 1
        assert stats.hit_rate == 0.5

    def test_upsert_behavior(self, cache):
        profile = j_profile(cycle(4), RainbowMode.ALL_VERTICES)
        cache.set(cycle(4), profile)
        cache.set(cycle(4), profile)
        assert cache.get_stats().total_entries == 1

    def test_graph_key(self):
        assert ProfileCache.graph_key(null(0)) == ""
        assert ProfileCache.graph_key(cycle(3)) == "Bw"

    def test_null_graph_round_trip(self, cache):
        cache.get_or_compute(null(0), RainbowMode.ALL_VERTICES)
        cached = cache.get(null(0), RainbowMode.ALL_VERTICES)
        assert cached.j_value == 1
        assert cached.convention_applied

    def test_other_revision_is_not_served(self, temp_db):
        with ProfileCache(temp_db, revision=1) as old:
            old.get_or_compute(cycle(6), RainbowMode.ALL_VERTICES)

        with ProfileCache(temp_db, revision=2) as new:
            assert new.get(cycle(6), RainbowMode.ALL_VERTICES) is None
            assert new.get_stats().stale_entries == 1
            assert new.purge_stale() == 1
            assert new.get_stats().total_entries == 0

    def test_clear_all(self, cache):
        cache.get_or_compute(cycle(4), RainbowMode.ALL_VERTICES)
        cache.get_or_compute(cycle(4), RainbowMode.INTERNAL_ONLY)
        assert cache.clear_all() == 2
        stats = cache.get_stats()
        assert stats.total_entries == 0
        assert stats.total_hits == stats.total_misses == 0

    def test_entries_by_mode(self, cache):
        cache.get_or_compute(cycle(4), RainbowMode.ALL_VERTICES)
        cache.get_or_compute(cycle(6), RainbowMode.ALL_VERTICES)
        cache.get_or_compute(cycle(6), RainbowMode.INTERNAL_ONLY)
        assert cache.get_stats().entries_by_mode == {"all_vertices": 2, "internal_only": 1}

    def test_context_manager(self, temp_db):
        with ProfileCache(temp_db) as cache:
            assert cache.get_stats().total_entries == 0
        assert cache._conn is None


class TestCacheStats:
    """Tests for CacheStats."""

    def test_to_dict(self):
        stats = CacheStats(total_entries=4, total_hits=3, total_misses=1, hit_rate=0.75,
                           entries_by_mode={"all_vertices": 4})
        d = stats.to_dict()
        assert d["total_entries"] == 4
        assert d["hit_rate"] == 0.75
        assert d["entries_by_mode"]["all_vertices"] == 4

    def test_hit_rate_rounding(self):
        assert CacheStats(hit_rate=0.33333333).to_dict()["hit_rate"] == 0.3333


class TestInitDatabase:
    """Tests for database initialization."""

    def test_init_creates_tables(self, temp_db):
        conn = init_database(temp_db)
        cursor = conn.cursor()
        cursor.execute("SELECT name FROM sqlite_master WHERE type='table'")
        tables = [row[0] for row in cursor.fetchall()]
        assert "profile_cache" in tables
        assert "cache_stats" in tables
        conn.close()

    def test_init_creates_directory(self):
        """Test that init_database creates parent directory."""
        with tempfile.TemporaryDirectory() as tmpdir:
            db_path = os.path.join(tmpdir, "subdir", "nested", "cache.db")
            conn = init_database(db_path)
            assert os.path.exists(db_path)
            conn.close()

    def test_init_initializes_stats(self, temp_db):
        conn = init_database(temp_db)
        row = conn.cursor().execute("SELECT hits, misses FROM cache_stats").fetchone()
        assert row["hits"] == 0
        assert row["misses"] == 0
        conn.close()

"""
Tests for the storage module.

Tests the binary coefficient-table cache.
"""

import numpy as np
import pytest

from engine.storage import FORMAT_VERSION, TableCache


def make_table(n_nodes=6, s_max=3):
    """Small complex arrays with distinct entries."""
    nodes = np.exp(2j * np.pi * np.arange(n_nodes) / n_nodes)
    grid = np.arange(n_nodes * (s_max + 1), dtype=float).reshape(n_nodes, s_max + 1)
    return nodes, grid + 0.5j * grid, -grid + 1j


@pytest.fixture
def cache(tmp_path):
    """A cache file inside a fresh directory."""
    return TableCache(tmp_path / "tables.bin")


class TestTableCache:
    """Tests for saving, loading and clearing the cache."""

    def test_absent(self, cache):
        """Test that a missing file reads as absent."""
        assert not cache.exists
        assert cache.read_header() is None
        assert cache.load(3, 6) is None

    def test_roundtrip(self, cache):
        """Test that a saved table comes back unchanged."""
        nodes, ahat, bhat = make_table()
        cache.save(nodes, ahat, bhat)

        table = cache.load(3, 6)
        assert table is not None
        assert (table.n_nodes, table.s_max) == (6, 3)
        assert np.array_equal(table.nodes, nodes)
        assert np.array_equal(table.ahat, ahat)
        assert np.array_equal(table.bhat, bhat)

    def test_header(self, cache):
        """Test that the header records version, node count and s_max."""
        cache.save(*make_table(n_nodes=8, s_max=2))
        assert cache.read_header() == (FORMAT_VERSION, 8, 2)

    def test_stale_shape(self, cache):
        """Test that a table of another shape is not returned."""
        cache.save(*make_table(n_nodes=6, s_max=3))
        assert cache.load(4, 6) is None
        assert cache.load(3, 7) is None

    def test_truncated_file(self, cache):
        """Test that a short body reads as absent."""
        cache.save(*make_table())
        data = cache.path.read_bytes()
        cache.path.write_bytes(data[:-24])
        assert cache.read_header() is not None
        assert cache.load(3, 6) is None

    def test_short_header(self, cache):
        """Test that a file shorter than the header reads as absent."""
        cache.path.write_bytes(b"\x00" * 10)
        assert cache.exists
        assert cache.read_header() is None

    def test_shape_mismatch(self, cache):
        """Test that inconsistent arrays are refused before writing."""
        nodes, ahat, bhat = make_table()
        with pytest.raises(ValueError):
            cache.save(nodes[:-1], ahat, bhat)
        with pytest.raises(ValueError):
            cache.save(nodes, ahat, bhat[:, :-1])
        assert not cache.exists

    def test_creates_directories(self, tmp_path):
        """Test that parent directories are created on save."""
        nested = TableCache(tmp_path / "a" / "b" / "tables.bin")
        nested.save(*make_table())
        assert nested.exists

    def test_clear(self, cache):
        """Test deleting the cache file."""
        assert cache.clear() is False
        cache.save(*make_table())
        assert cache.clear() is True
        assert not cache.exists

    def test_expands_user(self):
        """Test that ~ in the path is expanded."""
        assert "~" not in str(TableCache("~/tables.bin").path)

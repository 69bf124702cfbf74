"""
Process-wide access to the coefficient tables.

The first caller builds (or loads) the tables under a lock; every later call
returns the same immutable object, so evaluations on any thread share it.
"""

import logging
import threading
from pathlib import Path
from typing import Optional

from engine.config import load_settings
from engine.storage.table_cache import TableCache
from engine.uniform.coefficients import (
    N_NODES,
    S_MAX,
    CoeffTables,
    build_coeff_tables,
    exact_tables,
    with_contour,
)

logger = logging.getLogger(__name__)

_lock = threading.Lock()
_tables: Optional[CoeffTables] = None


def get_coeff_tables(
    cache_path: Optional[Path] = None, rebuild: bool = False
) -> CoeffTables:
    """
    Shared CoeffTables with s_max = 16 and 2000 contour nodes.

    Args:
        cache_path: Cache file to read and write; defaults to PCFU_TABLE_CACHE
        rebuild: Ignore both the in-memory copy and the cache file

    Returns:
        The shared tables
    """
    global _tables
    tables = _tables
    if tables is not None and not rebuild:
        return tables
    with _lock:
        if _tables is None or rebuild:
            path = cache_path if cache_path is not None else load_settings().table_cache_path
            _tables = _load_or_build(path, rebuild)
        return _tables


def _load_or_build(path: Optional[Path], rebuild: bool) -> CoeffTables:
    cache = TableCache(path) if path is not None else None
    if cache is not None and not rebuild:
        cached = cache.load(S_MAX, N_NODES)
        if cached is not None:
            logger.debug("loaded coefficient table from %s", cache.path)
            return with_contour(exact_tables(S_MAX), cached.nodes, cached.ahat, cached.bhat)

    tables = build_coeff_tables(S_MAX, N_NODES)
    if cache is not None:
        try:
            cache.save(tables.contour_nodes, tables.ahat_vals, tables.bhat_vals)
        except OSError as exc:
            logger.warning("could not write coefficient cache %s: %s", cache.path, exc)
    return tables

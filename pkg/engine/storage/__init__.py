"""
Storage module for pcfu.

On-disk cache of the Airy-expansion contour table, so the exact coefficient
generation runs once per machine instead of once per process.
"""

from engine.storage.table_cache import (
    DEFAULT_CACHE_PATH,
    FORMAT_VERSION,
    CachedTable,
    TableCache,
)

__all__ = [
    "TableCache",
    "CachedTable",
    "DEFAULT_CACHE_PATH",
    "FORMAT_VERSION",
]

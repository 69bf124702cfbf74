"""
Runtime Settings for pcfu

Settings come from the environment so library users and the CLI see the same
values. The CLI may override them with explicit options.

Environment:
    PCFU_TABLE_CACHE: path of the binary coefficient-table cache
    PCFU_LOG_LEVEL:   logging level name used by the CLI (default WARNING)
"""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional

TABLE_CACHE_ENV = "PCFU_TABLE_CACHE"
LOG_LEVEL_ENV = "PCFU_LOG_LEVEL"

DEFAULT_TOL = 1e-15
MAX_ABS_ORDER = 60.0


@dataclass(frozen=True)
class Settings:
    """
    Process-wide configuration.

    Attributes:
        table_cache_path: Where coefficient tables are cached; None keeps them in memory only
        log_level: Name of the logging level for console output
    """

    table_cache_path: Optional[Path] = None
    log_level: str = "WARNING"

    @property
    def log_level_value(self) -> int:
        """Numeric logging level, falling back to WARNING for unknown names."""
        value = logging.getLevelName(self.log_level.upper())
        return value if isinstance(value, int) else logging.WARNING


def load_settings(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """
    Build Settings from environment variables.

    Args:
        environ: Mapping to read instead of os.environ (used by tests)

    Returns:
        Settings with every unset variable at its default
    """
    env = os.environ if environ is None else environ
    cache = env.get(TABLE_CACHE_ENV, "").strip()
    return Settings(
        table_cache_path=Path(cache).expanduser() if cache else None,
        log_level=env.get(LOG_LEVEL_ENV, "WARNING").strip() or "WARNING",
    )

"""
CLI module for pcfu.

The command-line interface providing eval, map, selftest and tables commands.
"""

from cli.main import app, run

__all__ = ["app", "run"]

"""
Binary Cache for Coefficient Tables

Building the contour table means generating 33 exact polynomials and composing
formal series at 2000 nodes. The result is a few megabytes of doubles, so it is
worth keeping on disk between runs.

Design Decisions:
    - One flat file, all little-endian float64, no external format
    - A header of three doubles: format version, N, s_max
    - Any mismatch or short read means "absent": the caller rebuilds and overwrites
    - Only the contour table is stored; exact polynomials are regenerated

Layout:
    header:  3 x <f8           (version, n_nodes, s_max)
    nodes:   N x <c16          (t_k)
    ahat:    N*(s_max+1) x <c16 (row k holds Ahat_0..Ahat_smax at t_k)
    bhat:    N*(s_max+1) x <c16

Academic Context:
    Input: Contour nodes and coefficient arrays
    Transformation: Raw little-endian serialization
    Output: A file readable on any platform with IEEE doubles
    Limitation: No checksum; a truncated file is detected, a corrupted one is not
"""

import logging
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO, Iterator, Optional

import numpy as np

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
HEADER_DOUBLES = 3

# Default cache location, relative to the working directory
DEFAULT_CACHE_PATH = ".pcfu/coeff-tables.bin"


@dataclass(frozen=True)
class CachedTable:
    """
    Contour table as read from disk.

    Attributes:
        n_nodes: Number of contour nodes
        s_max: Highest coefficient index
        nodes: (N,) complex nodes
        ahat: (N, s_max + 1) complex array
        bhat: (N, s_max + 1) complex array
    """

    n_nodes: int
    s_max: int
    nodes: np.ndarray
    ahat: np.ndarray
    bhat: np.ndarray


class TableCache:
    """
    File-backed store for one contour table.

    Usage:
        cache = TableCache("~/.cache/pcfu/tables.bin")
        cache.save(nodes, ahat, bhat)
        table = cache.load(s_max=16, n_nodes=2000)
    """

    def __init__(self, path: str | Path = DEFAULT_CACHE_PATH) -> None:
        """
        Args:
            path: Cache file. Parent directories are created on save.
        """
        self._path = Path(path).expanduser()

    @property
    def path(self) -> Path:
        """Location of the cache file."""
        return self._path

    @property
    def exists(self) -> bool:
        """True when a cache file is present (it may still be stale)."""
        return self._path.is_file()

    @contextmanager
    def _open(self, mode: str) -> Iterator[BinaryIO]:
        """Open the cache file; on a failed write the partial file is removed."""
        if "w" in mode:
            self._path.parent.mkdir(parents=True, exist_ok=True)
        handle = open(self._path, mode)
        try:
            yield handle
        except Exception:
            handle.close()
            if "w" in mode:
                self._path.unlink(missing_ok=True)
            raise
        else:
            handle.close()

    def save(self, nodes: np.ndarray, ahat: np.ndarray, bhat: np.ndarray) -> None:
        """
        Write a contour table, replacing any previous file.

        Args:
            nodes: (N,) complex nodes
            ahat: (N, s_max + 1) complex values
            bhat: (N, s_max + 1) complex values
        """
        n_nodes, width = ahat.shape
        if nodes.shape != (n_nodes,) or bhat.shape != ahat.shape:
            raise ValueError("nodes, ahat and bhat disagree in shape")
        header = np.array([FORMAT_VERSION, n_nodes, width - 1], dtype="<f8")
        with self._open("wb") as handle:
            handle.write(header.tobytes())
            for arr in (nodes, ahat, bhat):
                handle.write(np.ascontiguousarray(arr, dtype="<c16").tobytes())
        logger.debug(
            "saved coefficient table (N=%d, s_max=%d) to %s", n_nodes, width - 1, self._path
        )

    def read_header(self) -> Optional[tuple[int, int, int]]:
        """(version, n_nodes, s_max) or None when the file is absent or too short."""
        if not self.exists:
            return None
        with self._open("rb") as handle:
            raw = handle.read(8 * HEADER_DOUBLES)
        if len(raw) < 8 * HEADER_DOUBLES:
            return None
        version, n_nodes, s_max = np.frombuffer(raw, dtype="<f8")
        return int(version), int(n_nodes), int(s_max)

    def load(self, s_max: int, n_nodes: int) -> Optional[CachedTable]:
        """
        Read the table if it exists and matches the requested shape.

        Returns:
            CachedTable, or None when the file is absent, stale or truncated
        """
        header = self.read_header()
        if header is None:
            return None
        if header != (FORMAT_VERSION, n_nodes, s_max):
            logger.warning("ignoring coefficient cache %s with header %s", self._path, header)
            return None

        width = s_max + 1
        with self._open("rb") as handle:
            handle.seek(8 * HEADER_DOUBLES)
            raw = handle.read()
        expected = n_nodes * (1 + 2 * width)
        if len(raw) != 16 * expected:
            logger.warning("coefficient cache %s is truncated, rebuilding", self._path)
            return None
        body = np.frombuffer(raw, dtype="<c16")

        nodes = body[:n_nodes].astype(complex)
        block = n_nodes * width
        ahat = body[n_nodes : n_nodes + block].reshape(n_nodes, width).astype(complex)
        bhat = body[n_nodes + block :].reshape(n_nodes, width).astype(complex)
        return CachedTable(n_nodes, s_max, nodes, ahat, bhat)

    def clear(self) -> bool:
        """Delete the cache file; True if one was removed."""
        if not self.exists:
            return False
        self._path.unlink()
        return True

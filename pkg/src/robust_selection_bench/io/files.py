"""Atomic file output."""

import logging
import os
import tempfile
from pathlib import Path
from typing import Union

from robust_selection_bench.errors import handle_os_error

logger = logging.getLogger(__name__)


def atomic_write_bytes(path: Union[str, Path], data: bytes) -> Path:
    """Write bytes through a temporary file in the target directory, then rename.

    Readers never observe a partially written file.

    Raises:
        RobustSelectionError: If the directory cannot be created or written
    """
    path = Path(path)
    tmp_name = None
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile(
            mode="wb", dir=path.parent, prefix=f".{path.name}.", suffix=".tmp", delete=False
        ) as handle:
            tmp_name = handle.name
            handle.write(data)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp_name, path)
        tmp_name = None
    except OSError as e:
        raise handle_os_error(e, path)
    finally:
        if tmp_name is not None:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
    logger.debug(f"Wrote {len(data)} bytes to {path}")
    return path


def atomic_write_text(path: Union[str, Path], text: str) -> Path:
    """Write text with ``\\n`` line endings atomically."""
    return atomic_write_bytes(path, text.encode("utf-8"))


def read_bytes(path: Union[str, Path]) -> bytes:
    """Read a file, mapping OS failures to library errors."""
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise handle_os_error(e, path)

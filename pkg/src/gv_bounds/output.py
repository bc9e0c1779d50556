"""Writing results to files or standard output."""

import logging
import os
import sys
import tempfile
from pathlib import Path

LOGGER = logging.getLogger(__name__)


def atomic_write(path: Path, text: str) -> None:
    """Write text to path through a temporary file so no partial file is left behind."""
    path = Path(path)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as tmp:
            tmp.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
    LOGGER.info(f"Wrote {len(text)} characters to {path}")


def write_output(text: str, path: Path | None) -> None:
    """Write text to path, or to standard output when no path is given."""
    if path is None:
        sys.stdout.write(text)
    else:
        atomic_write(path, text)

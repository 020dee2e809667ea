"""Disk cache for expensive exact objects (shadow polynomials, discriminants).

Location: $GAMMAENUM_CACHE if set, else ``.cache/`` under the working
directory.  Entries are JSON arrays of exact decimal coefficient strings, so a
cache hit reproduces the computation byte for byte.  Writes are atomic
(temp file + rename).
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .exact import Poly, coeff_strings, poly_from_strings

ENV_VAR = "GAMMAENUM_CACHE"
DEFAULT_DIR = ".cache"


def cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    if explicit is not None:
        return Path(explicit)
    return Path(os.environ.get(ENV_VAR, DEFAULT_DIR))


def _write_atomic(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, indent=0, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def store_poly(name: str, poly: Poly, directory: Path | None = None) -> Path:
    path = cache_dir(directory) / f"{name}.json"
    _write_atomic(path, {"name": name, "coefficients": coeff_strings(poly)})
    return path


def load_poly(name: str, directory: Path | None = None) -> Poly | None:
    path = cache_dir(directory) / f"{name}.json"
    if not path.exists():
        return None
    with open(path) as fh:
        payload = json.load(fh)
    return poly_from_strings(payload["coefficients"])


def clear(directory: Path | None = None) -> int:
    """Remove all cache entries; returns the number of files deleted."""
    d = cache_dir(directory)
    removed = 0
    if d.is_dir():
        for path in sorted(d.glob("*.json")):
            path.unlink()
            removed += 1
    return removed


def status(directory: Path | None = None) -> list[tuple[str, int]]:
    """Sorted (entry name, byte size) pairs for everything in the cache."""
    d = cache_dir(directory)
    if not d.is_dir():
        return []
    return [(p.stem, p.stat().st_size) for p in sorted(d.glob("*.json"))]

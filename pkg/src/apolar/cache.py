"""On-disk table of verified degree-2 bound certificates.

The file is a JSON array of entry dicts.  Loading re-verifies every
certificate by reparsing the form and recomputing its Hilbert function;
entries that fail are dropped with a warning rather than trusted.  Storing
merges new entries in, keeping the smallest bound per (socle degree,
codimension) pair and preferring the incumbent on ties, and writes
atomically.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile

from .errors import CorruptCacheError
from .search import FBoundEntry

log = logging.getLogger(__name__)


def load_table(path: str, missing_ok: bool = True) -> list[FBoundEntry]:
    """Load and re-verify all entries; a missing or empty file is an empty
    table, a structurally broken one raises CorruptCacheError."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except FileNotFoundError:
        if missing_ok:
            return []
        raise CorruptCacheError(f"cache file not found: {path}")
    if not text.strip():
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorruptCacheError(f"cache file {path} is not valid JSON: {exc}")
    if not isinstance(data, list):
        raise CorruptCacheError(f"cache file {path} must hold a JSON array")
    entries = []
    for pos, item in enumerate(data):
        try:
            entry = FBoundEntry.from_dict(item)
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("dropping malformed cache entry %d in %s: %s", pos, path, exc)
            continue
        if not entry.verify():
            log.warning(
                "dropping cache entry %d in %s: certificate for e=%d r=%d "
                "failed re-verification",
                pos, path, entry.e, entry.r,
            )
            continue
        entries.append(entry)
    return entries


def merge_store(path: str, entries) -> list[FBoundEntry]:
    """Merge `entries` into the table at `path` and write it back
    atomically.  Per (e, r) the smallest bound wins; on a tie the entry
    already in the file is kept.  Returns the merged table."""
    table = {(en.e, en.r): en for en in load_table(path, missing_ok=True)}
    for en in entries:
        key = (en.e, en.r)
        old = table.get(key)
        if old is None or en.bound < old.bound:
            table[key] = en
    merged = [table[key] for key in sorted(table)]
    payload = json.dumps([en.to_dict() for en in merged], indent=2)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    return merged

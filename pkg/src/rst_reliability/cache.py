"""Content-addressed on-disk cache of coefficient vectors.

Entries live at ``<root>/v<version>/<engine>/<canonical key hex>.json``.
Inserts write a private temp file and hard-link it into place, so the first
writer wins and every reader sees a complete file.
"""

from __future__ import annotations

import os
import tempfile
import warnings
from pathlib import Path

from .graph import LabeledGraph, canonical_key
from .reliability import CoeffVector, coeffs

CACHE_ENV = "RST_RELIABILITY_CACHE"
CACHE_VERSION = 1


def default_root() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "rst_reliability"


class CoeffCache:
    def __init__(self, root: str | os.PathLike | None = None, version: int = CACHE_VERSION):
        self.root = Path(root) if root is not None else default_root()
        self.version = version

    def path(self, key: bytes, engine: str) -> Path:
        return self.root / f"v{self.version}" / engine / f"{key.hex()}.json"

    def get(self, key: bytes, engine: str) -> CoeffVector | None:
        """The stored vector, or None on a miss or an unreadable entry."""
        path = self.path(key, engine)
        try:
            text = path.read_text()
        except FileNotFoundError:
            return None
        try:
            vec = CoeffVector.from_json(text)
            vec.check_invariants()
            return vec
        except (ValueError, KeyError, TypeError, AssertionError) as exc:
            warnings.warn(f"corrupt cache entry {path}: {exc}", RuntimeWarning, stacklevel=2)
            return None

    def put(self, key: bytes, engine: str, vec: CoeffVector, overwrite: bool = False) -> CoeffVector:
        """Insert if absent and return whatever ends up stored."""
        path = self.path(key, engine)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(vec.to_json())
            if overwrite:
                os.replace(tmp, path)
                tmp = None
                return vec
            try:
                os.link(tmp, path)
            except FileExistsError:
                existing = self.get(key, engine)
                if existing is not None:
                    return existing
                os.replace(tmp, path)
                tmp = None
            return vec
        finally:
            if tmp is not None:
                os.unlink(tmp)

    def get_or_compute(self, G: LabeledGraph, engine: str = "decomposition") -> CoeffVector:
        key = canonical_key(G)
        hit = self.get(key, engine)
        if hit is not None:
            return hit
        corrupt = self.path(key, engine).exists()
        return self.put(key, engine, coeffs(G, engine), overwrite=corrupt)

    def entries(self) -> list[Path]:
        base = self.root / f"v{self.version}"
        return sorted(base.glob("*/*.json")) if base.exists() else []

    def clear(self) -> int:
        removed = 0
        for p in self.entries():
            p.unlink(missing_ok=True)
            removed += 1
        return removed

"""On-disk witness store: ``<name>.gcg`` files plus a one-line ``<name>.meta`` sidecar."""

from __future__ import annotations

import os
import tempfile
import threading
from pathlib import Path

from .core import ColoredCompleteGraph, parse, serialize

ENV_VAR = "GRKIT_STORE"

_locks: dict[str, threading.Lock] = {}
_locks_guard = threading.Lock()


def default_store_dir(flag: str | None = None) -> Path:
    """Flag wins, then $GRKIT_STORE, then ./witnesses."""
    if flag:
        return Path(flag)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path("witnesses")


def name_lock(name: str) -> threading.Lock:
    with _locks_guard:
        return _locks.setdefault(name, threading.Lock())


class WitnessStore:
    def __init__(self, root=None):
        self.root = default_store_dir(None if root is None else str(root))

    def path(self, name: str) -> Path:
        return self.root / f"{name}.gcg"

    def __contains__(self, name: str) -> bool:
        return self.path(name).is_file()

    def load(self, name: str) -> ColoredCompleteGraph | None:
        p = self.path(name)
        if not p.is_file():
            return None
        return parse(p.read_text())

    def meta(self, name: str) -> str | None:
        p = self.root / f"{name}.meta"
        return p.read_text().strip() if p.is_file() else None

    def save(self, name: str, g: ColoredCompleteGraph, meta: dict | None = None) -> Path:
        self.root.mkdir(parents=True, exist_ok=True)
        _atomic_write(self.path(name), serialize(g))
        if meta:
            line = " ".join(f"{k}={v}" for k, v in meta.items())
            _atomic_write(self.root / f"{name}.meta", line + "\n")
        return self.path(name)


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise

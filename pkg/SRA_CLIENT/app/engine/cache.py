import hashlib
import threading
from collections import OrderedDict

import config


def content_key(*parts) -> bytes:
    """SHA-256 of canonical textual parts (generator lists, order names)."""
    return hashlib.sha256("\x1f".join(repr(p) for p in parts).encode()).digest()


class GBCache:
    """Bounded LRU memo of Groebner bases keyed by content hash; safe for concurrent readers."""

    def __init__(self, maxsize: int | None = None):
        self.maxsize = config.GB_CACHE_SIZE if maxsize is None else maxsize
        self._store = OrderedDict()
        self._lock = threading.Lock()

    def get_or_compute(self, key, compute):
        with self._lock:
            if key in self._store:
                self._store.move_to_end(key)
                return self._store[key]
        value = compute()
        with self._lock:
            value = self._store.setdefault(key, value)
            self._store.move_to_end(key)
            while len(self._store) > max(self.maxsize, 1):
                self._store.popitem(last=False)
            return value

    def __contains__(self, key):
        return key in self._store

    def __len__(self):
        return len(self._store)

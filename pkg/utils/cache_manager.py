"""Bounded LRU cache for reduced Groebner bases"""

from collections import OrderedDict
from threading import Lock
from typing import Any, Dict, Hashable, Optional

from core.config import EngineConfig
from core.logging_config import get_logger

logger = get_logger("utils.cache_manager")


class LRUCache:
    """Least-recently-used cache shared by worker threads

    Values are immutable and written once per key: a second set() for the same
    key keeps the first value, so concurrent computations of one basis agree.
    """

    def __init__(self, max_size: int = 256):
        self.max_size = max_size
        self._entries: "OrderedDict[Hashable, Any]" = OrderedDict()
        self._lock = Lock()
        self._hits = 0
        self._misses = 0

    def get(self, key: Hashable) -> Optional[Any]:
        """Value for key (marked most recent), or None"""
        with self._lock:
            if key not in self._entries:
                self._misses += 1
                return None
            self._entries.move_to_end(key)
            self._hits += 1
            return self._entries[key]

    def set(self, key: Hashable, value: Any) -> Any:
        """Store value; returns the value held for key afterwards"""
        with self._lock:
            held = self._entries.get(key)
            if held is not None:
                return held
            while len(self._entries) >= self.max_size:
                self._entries.popitem(last=False)
            self._entries[key] = value
            return value

    def clear(self) -> None:
        with self._lock:
            dropped = len(self._entries)
            self._entries.clear()
            self._hits = self._misses = 0
        logger.debug(f"Groebner cache cleared ({dropped} bases)")

    def get_stats(self) -> Dict[str, Any]:
        """size, max_size, hits, misses and hit_rate as a percentage string"""
        with self._lock:
            lookups = self._hits + self._misses
            rate = 100.0 * self._hits / lookups if lookups else 0.0
            return {
                "size": len(self._entries),
                "max_size": self.max_size,
                "hits": self._hits,
                "misses": self._misses,
                "hit_rate": f"{rate:.1f}%",
            }


# keyed by (ring, generators, order) for commutative ideals, (ring, generators) for left Weyl ideals
_groebner_cache = LRUCache(max_size=EngineConfig.from_env().gb_cache_size)


def get_groebner_cache() -> LRUCache:
    return _groebner_cache

"""In-process memoisation of expensive numerical results."""

import functools
import threading
from collections import OrderedDict
from typing import Any, Callable, Optional, TypeVar

from loguru import logger
from typing_extensions import ParamSpec

from ..constants import DEFAULT_CACHE_SIZE

T = TypeVar("T")
P = ParamSpec("P")


class MemoryCache:
    """Thread-safe bounded in-memory cache, least recently used evicted first."""

    def __init__(self, max_size: int = DEFAULT_CACHE_SIZE) -> None:
        """Initialize in-memory cache.

        Args:
            max_size: Maximum number of entries
        """
        self._cache: "OrderedDict[str, Any]" = OrderedDict()
        self._lock = threading.Lock()
        self.max_size = max_size

    def get(self, key: str) -> Optional[Any]:
        """Get value from memory cache.

        Args:
            key: Cache key

        Returns:
            Any: Cached value or None if not found
        """
        with self._lock:
            if key not in self._cache:
                return None
            self._cache.move_to_end(key)
            return self._cache[key]

    def set(self, key: str, value: Any) -> None:
        """Set value in memory cache.

        Args:
            key: Cache key
            value: Value to cache
        """
        with self._lock:
            self._cache[key] = value
            self._cache.move_to_end(key)
            while len(self._cache) > self.max_size:
                evicted, _ = self._cache.popitem(last=False)
                logger.debug(f"Cache evicted {evicted}")

    def clear(self) -> None:
        """Drop every entry."""
        with self._lock:
            self._cache.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._cache)


def get_cache_key(prefix: str, *args: Any, **kwargs: Any) -> str:
    """Generate a cache key from prefix and arguments.

    Floats are rendered with repr so that distinct doubles never share a key.

    Args:
        prefix: Cache key prefix
        *args: Positional arguments
        **kwargs: Keyword arguments

    Returns:
        Generated cache key
    """
    key_parts = [prefix]
    key_parts.extend(repr(arg) for arg in args)
    key_parts.extend(f"{k}={v!r}" for k, v in sorted(kwargs.items()))
    return ":".join(key_parts)


quadrature_cache = MemoryCache()


def memoize(
    prefix: str, cache: Optional[MemoryCache] = None
) -> Callable[[Callable[P, T]], Callable[P, T]]:
    """Memoize a pure function of hashable, repr-stable arguments.

    Args:
        prefix: Key prefix identifying the function
        cache: Cache instance, defaults to the shared quadrature cache

    Returns:
        Callable: Decorator
    """

    def decorator(func: Callable[P, T]) -> Callable[P, T]:
        @functools.wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> T:
            store = cache if cache is not None else quadrature_cache
            key = get_cache_key(prefix, *args, **kwargs)
            cached = store.get(key)
            if cached is not None:
                return cached  # type: ignore[no-any-return]
            value = func(*args, **kwargs)
            store.set(key, value)
            return value

        return wrapper

    return decorator

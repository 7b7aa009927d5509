"""Tests for caching utilities."""

from xxzlab.utils.cache import MemoryCache, get_cache_key, memoize


def test_memory_cache_set_get() -> None:
    """Test memory cache set and get operations."""
    cache = MemoryCache()
    cache.set("key", 1.5)
    assert cache.get("key") == 1.5
    assert cache.get("missing") is None


def test_memory_cache_evicts_least_recently_used() -> None:
    """Test LRU eviction."""
    cache = MemoryCache(max_size=2)
    cache.set("a", 1)
    cache.set("b", 2)
    assert cache.get("a") == 1
    cache.set("c", 3)

    assert len(cache) == 2
    assert cache.get("b") is None
    assert cache.get("a") == 1
    assert cache.get("c") == 3


def test_memory_cache_clear() -> None:
    """Test clear drops every entry."""
    cache = MemoryCache()
    cache.set("key", "value")
    cache.clear()
    assert len(cache) == 0
    assert cache.get("key") is None


def test_get_cache_key() -> None:
    """Test cache key generation."""
    assert get_cache_key("e_inf", 0.1) == "e_inf:0.1"
    assert get_cache_key("f", 1, lam=-0.2) == "f:1:lam=-0.2"
    assert get_cache_key("g", 0.1 + 0.2) != get_cache_key("g", 0.3)


def test_memoize_calls_once() -> None:
    """Test memoized function is evaluated once per argument."""
    cache = MemoryCache()
    calls = []

    @memoize("square", cache=cache)
    def square(x: float) -> float:
        calls.append(x)
        return x * x

    assert square(3.0) == 9.0
    assert square(3.0) == 9.0
    assert square(2.0) == 4.0
    assert calls == [3.0, 2.0]
    assert len(cache) == 2

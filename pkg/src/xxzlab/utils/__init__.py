"""Utility functions and classes for xxzlab."""

from .cache import MemoryCache, get_cache_key, memoize, quadrature_cache
from .logging import setup_logging
from .retry import attempt_damping, solve_retrying
from .validation import check_gamma, check_open_interval, validate_model

__all__ = [
    "MemoryCache",
    "get_cache_key",
    "memoize",
    "quadrature_cache",
    "setup_logging",
    "attempt_damping",
    "solve_retrying",
    "check_gamma",
    "check_open_interval",
    "validate_model",
]

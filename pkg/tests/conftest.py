"""Common test fixtures and configuration."""

import math
import os
from typing import Generator, List

import pytest

from xxzlab.models import BetheState, ModelParams
from xxzlab.solver import solve
from xxzlab.states import ground_state_numbers
from xxzlab.types import LogLevel
from xxzlab.utils.cache import quadrature_cache
from xxzlab.utils.logging import setup_logging


def pytest_collection_modifyitems(config: pytest.Config, items: List[pytest.Item]) -> None:
    """Skip long finite-size scans when SKIP_SLOW_TESTS is set."""
    if not os.getenv("SKIP_SLOW_TESTS"):
        return
    skip = pytest.mark.skip(reason="SKIP_SLOW_TESTS is set")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(autouse=True)
def quiet_logging() -> Generator[None, None, None]:
    """Keep loguru at warning level during tests."""
    setup_logging(LogLevel.WARNING)
    yield


@pytest.fixture
def clean_cache() -> Generator[None, None, None]:
    """Start and end with an empty quadrature cache."""
    quadrature_cache.clear()
    yield
    quadrature_cache.clear()


@pytest.fixture
def gamma_half() -> float:
    """Free-fermion point gamma = pi/2."""
    return math.pi / 2


@pytest.fixture
def gamma_generic() -> float:
    """Generic anisotropy 0.55 pi, away from every pi/n."""
    return 0.55 * math.pi


@pytest.fixture
def ground_8(gamma_half: float) -> BetheState:
    """Solved ground state at L=8, gamma=pi/2."""
    numbers = ground_state_numbers(8, 4)
    return solve(ModelParams(gamma=gamma_half, L=8, M=4), numbers)


@pytest.fixture
def ground_64(gamma_generic: float) -> BetheState:
    """Solved ground state at L=64, gamma=0.55 pi."""
    numbers = ground_state_numbers(64, 32)
    return solve(ModelParams(gamma=gamma_generic, L=64, M=32), numbers)

"""Tests for retry utilities."""

import pytest

from xxzlab.exceptions import NonConvergenceError, QuadratureError
from xxzlab.utils.retry import attempt_damping, solve_retrying


def test_retry_success() -> None:
    """Test successful retry."""
    attempts = []
    for attempt in solve_retrying(3):
        with attempt:
            attempts.append(attempt.retry_state.attempt_number)
            if len(attempts) < 2:
                raise NonConvergenceError(10, 1e-3)
    assert attempts == [1, 2]


def test_retry_max_attempts() -> None:
    """Test the last exception is re-raised unchanged."""
    attempts = 0
    with pytest.raises(NonConvergenceError) as exc_info:
        for attempt in solve_retrying(3):
            with attempt:
                attempts += 1
                raise NonConvergenceError(attempts, 1.0)
    assert attempts == 3
    assert exc_info.value.iterations == 3


def test_retry_non_retryable_error() -> None:
    """Test other errors are not retried."""
    attempts = 0
    with pytest.raises(QuadratureError):
        for attempt in solve_retrying(3):
            with attempt:
                attempts += 1
                raise QuadratureError("no")
    assert attempts == 1


def test_retry_single_attempt() -> None:
    """Test zero retries still runs once."""
    attempts = 0
    for attempt in solve_retrying(0):
        with attempt:
            attempts += 1
    assert attempts == 1


def test_attempt_damping() -> None:
    """Test damping halves per attempt."""
    assert attempt_damping(1.0, 1) == 1.0
    assert attempt_damping(1.0, 2) == 0.5
    assert attempt_damping(0.8, 3) == 0.2

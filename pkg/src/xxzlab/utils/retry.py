"""Retry policy for Bethe equation solves."""

from typing import Tuple, Type

from loguru import logger
from tenacity import RetryCallState, Retrying, retry_if_exception_type, stop_after_attempt

from ..exceptions import NonConvergenceError


def _log_retry(retry_state: RetryCallState) -> None:
    """Log a failed attempt before the next one starts."""
    exc = retry_state.outcome.exception() if retry_state.outcome else None
    logger.debug(f"Solve attempt {retry_state.attempt_number} failed: {exc}. Retrying...")


def solve_retrying(
    max_attempts: int,
    exceptions: Tuple[Type[BaseException], ...] = (NonConvergenceError,),
) -> Retrying:
    """Build the retry controller used around a Newton solve.

    Attempts follow each other immediately; the caller reads
    ``attempt.retry_state.attempt_number`` to adapt the damping. After the
    last attempt the final exception is re-raised unchanged.

    Args:
        max_attempts: Total number of attempts, at least 1
        exceptions: Exception types that trigger another attempt

    Returns:
        Retrying: Iterable of attempt context managers
    """
    return Retrying(
        stop=stop_after_attempt(max(1, max_attempts)),
        retry=retry_if_exception_type(exceptions),
        before_sleep=_log_retry,
        reraise=True,
    )


def attempt_damping(base_damping: float, attempt_number: int) -> float:
    """Damping for a given attempt: halved after every failure.

    Args:
        base_damping: Damping of the first attempt
        attempt_number: 1-based attempt number

    Returns:
        float: Damping to use
    """
    return float(base_damping) / (2 ** (attempt_number - 1))

"""Exceptions for xxzlab."""

from typing import Any, Dict, Optional


class XXZLabError(Exception):
    """Base exception for xxzlab errors."""

    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None,
    ) -> None:
        """Initialize exception.

        Args:
            message: Error message
            details: Optional error details
            cause: Optional cause of the error
        """
        super().__init__(message)
        self.details = details
        if cause is not None:
            self.__cause__ = cause


class ValidationError(XXZLabError):
    """Invalid input values."""


class ConfigurationError(XXZLabError):
    """Invalid run configuration."""


class DomainError(XXZLabError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation at a pole of an analytic continuation."""

    def __init__(
        self,
        message: str,
        omega: complex,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None,
    ) -> None:
        """Initialize exception.

        Args:
            message: Error message
            omega: Point at which the pole was hit
            details: Optional error details
            cause: Optional cause of the error
        """
        super().__init__(message, details, cause)
        self.omega = omega


class SolverError(XXZLabError):
    """Base exception for Bethe equation solver failures."""


class NonConvergenceError(SolverError):
    """Newton iteration did not reach the tolerance."""

    def __init__(
        self,
        iterations: int,
        residual: float,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None,
    ) -> None:
        """Initialize exception.

        Args:
            iterations: Number of iterations performed
            residual: Max-norm residual at the last iterate
            details: Optional error details
            cause: Optional cause of the error
        """
        self.iterations = iterations
        self.residual = residual
        super().__init__(
            f"No convergence after {iterations} iterations (residual {residual:.3e})",
            details,
            cause,
        )


class OrderViolationError(SolverError):
    """Converged roots are not in the order of their Bethe numbers."""

    def __init__(
        self,
        index: int,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None,
    ) -> None:
        """Initialize exception.

        Args:
            index: First index i with roots[i] >= roots[i + 1]
            details: Optional error details
            cause: Optional cause of the error
        """
        self.index = index
        super().__init__(
            f"Roots {index} and {index + 1} are not strictly increasing; "
            "the configuration probably has no real solution",
            details,
            cause,
        )


class QuadratureError(XXZLabError):
    """Adaptive quadrature failed to reach the requested accuracy."""


class DimensionError(XXZLabError):
    """Hilbert space sector too large for dense diagonalization."""


class ScalingError(XXZLabError):
    """Finite-size fit preconditions not met."""


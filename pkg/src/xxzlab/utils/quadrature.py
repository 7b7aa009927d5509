"""Adaptive quadrature over the real line."""

import math
import warnings
from typing import Callable

from loguru import logger
from scipy import integrate

from ..constants import QUAD_EPSABS, QUAD_EPSREL, QUAD_LIMIT
from ..exceptions import QuadratureError


def integrate_line(
    func: Callable[[float], float],
    scale: float = 1.0,
    epsrel: float = QUAD_EPSREL,
    epsabs: float = QUAD_EPSABS,
    limit: int = QUAD_LIMIT,
) -> float:
    """Integrate a smooth, exponentially decaying function over the real line.

    The line is split at 0 and +-scale; the two outer pieces are semi-infinite
    and handled by quad's tail mapping. Any integration warning is an error.

    Args:
        func: Integrand
        scale: Decay length of the integrand
        epsrel: Relative tolerance per piece
        epsabs: Absolute tolerance per piece
        limit: Subinterval limit per piece

    Returns:
        float: Integral

    Raises:
        QuadratureError: If quad reports a problem on any piece
    """
    pieces = ((-math.inf, -scale), (-scale, 0.0), (0.0, scale), (scale, math.inf))
    values = []
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        for low, high in pieces:
            try:
                value, error = integrate.quad(
                    func, low, high, epsabs=epsabs, epsrel=epsrel, limit=limit
                )
            except integrate.IntegrationWarning as w:
                raise QuadratureError(
                    f"quadrature failed on ({low}, {high}): {w}",
                    details={"low": low, "high": high},
                ) from w
            logger.debug(f"quad ({low}, {high}) = {value:.17g} +- {error:.1e}")
            values.append(value)
    return math.fsum(values)

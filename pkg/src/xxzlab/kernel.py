"""Special functions of the twisted XXZ chain.

Kernels of the logarithmic Bethe equations, the thermodynamic root density
and counting function, model constants, and the Fourier transforms of the
kernel derivatives continued to the imaginary axis.

Fourier transforms use the convention f^(w) = int f(x) exp(i w x) dx.
Every real-argument function accepts a float or a numpy array.
"""

import cmath
import math
from typing import List, Optional, Union

import numpy as np
import numpy.typing as npt

from .constants import ALPHA, FOURIER_EXP_SWITCH, POLE_TOL
from .exceptions import DomainError, PoleError
from .models import KernelConstants
from .utils.validation import check_gamma, check_open_interval

FloatOrArray = Union[float, npt.NDArray[np.float64]]


def theta(lam: FloatOrArray, a: float) -> FloatOrArray:
    """Odd kernel -(1/2 i pi) log(-sinh(lam + i a) / sinh(lam - i a)).

    Evaluated as (1/pi) arctan(tanh(lam) cot(a)), which is the continuous odd
    branch on the whole real line for 0 < a < pi.

    Args:
        lam: Rapidity
        a: Kernel parameter in (0, pi)

    Returns:
        Kernel value, bounded by 1/2 - a/pi in absolute value
    """
    a = check_open_interval(a, 0.0, math.pi, "a")
    cot = math.cos(a) / math.sin(a)
    return np.arctan(np.tanh(lam) * cot) / np.pi  # type: ignore[no-any-return]


def theta_prime(lam: FloatOrArray, a: float) -> FloatOrArray:
    """Derivative (1/pi) sin(2a) / (cosh(2 lam) - cos(2a)) of :func:`theta`.

    Written in terms of exp(-2|lam|) so that it never overflows.
    """
    a = check_open_interval(a, 0.0, math.pi, "a")
    x = np.exp(-2.0 * np.abs(np.asarray(lam, dtype=np.float64)))
    value = 2.0 * math.sin(2.0 * a) * x / (1.0 - 2.0 * math.cos(2.0 * a) * x + x * x)
    return value / np.pi  # type: ignore[no-any-return]


def theta_fourier(omega: complex, a: float) -> complex:
    """Fourier transform of :func:`theta_prime`: sinh((pi - 2a) w/2) / sinh(pi w/2).

    Raises:
        PoleError: At a zero of sinh(pi w / 2) that the numerator does not cancel
    """
    a = check_open_interval(a, 0.0, math.pi, "a")
    return _sinh_ratio((math.pi - 2.0 * a) / 2.0, math.pi / 2.0, omega)


def s_fn(lam: FloatOrArray, gamma: float) -> FloatOrArray:
    """Kernel s(lam) = (1/pi) arctan(tanh(lam) / tan(gamma/2)).

    Args:
        lam: Rapidity
        gamma: Anisotropy in (0, pi)

    Returns:
        s(lam), odd, tending to +-(1/2 - gamma/(2 pi))

    Raises:
        DomainError: If gamma is outside (0, pi)
    """
    gamma = check_gamma(gamma)
    return theta(lam, gamma / 2.0)


def r_fn(lam: FloatOrArray, gamma: float) -> FloatOrArray:
    """Kernel r(lam) = -(1/2 i pi) log(-sinh(lam + i gamma) / sinh(lam - i gamma)).

    The limit at +infinity is 1/2 - gamma/pi, negative for gamma > pi/2; r
    vanishes identically at gamma = pi/2.

    Raises:
        DomainError: If gamma is outside (0, pi)
    """
    gamma = check_gamma(gamma)
    return theta(lam, gamma)


def s_prime(lam: FloatOrArray, gamma: float) -> FloatOrArray:
    """Derivative (1/pi) sin(gamma) / (cosh(2 lam) - cos(gamma)) of s."""
    gamma = check_gamma(gamma)
    return theta_prime(lam, gamma / 2.0)


def r_prime(lam: FloatOrArray, gamma: float) -> FloatOrArray:
    """Derivative (1/pi) sin(2 gamma) / (cosh(2 lam) - cos(2 gamma)) of r.

    Even in lam; positive for gamma < pi/2 and negative for gamma > pi/2.
    """
    gamma = check_gamma(gamma)
    return theta_prime(lam, gamma)


def sigma_inf(lam: FloatOrArray, gamma: float) -> FloatOrArray:
    """Thermodynamic root density 1 / (2 gamma cosh(pi lam / gamma))."""
    gamma = check_gamma(gamma)
    x = np.exp(-np.pi * np.abs(np.asarray(lam, dtype=np.float64)) / gamma)
    return x / (gamma * (1.0 + x * x))  # type: ignore[no-any-return]


def sigma_inf_fourier(omega: complex, gamma: float) -> complex:
    """Fourier transform 1 / (2 cosh(gamma w / 2)) of the root density."""
    gamma = check_gamma(gamma)
    denominator = 2.0 * cmath.cosh(gamma * complex(omega) / 2.0)
    if abs(denominator) < POLE_TOL:
        raise PoleError("root density transform has a pole here", omega=omega)
    return 1.0 / denominator


def z_inf(lam: FloatOrArray, gamma: float) -> FloatOrArray:
    """Thermodynamic counting function, the odd antiderivative of sigma_inf.

    Equal to gd(pi lam / gamma) / (2 pi) with gd the Gudermannian; tends to
    +-1/4.
    """
    gamma = check_gamma(gamma)
    u = np.pi * np.asarray(lam, dtype=np.float64) / gamma
    return np.arctan(np.tanh(u / 2.0)) / np.pi  # type: ignore[no-any-return]


def z_inf_inverse(x: FloatOrArray, gamma: float) -> FloatOrArray:
    """Inverse of :func:`z_inf` on (-1/4, 1/4).

    Closed form (gamma/pi) arcsinh(tan(2 pi x)) followed by one Newton step
    that is kept only where it lowers the residual.

    Raises:
        DomainError: If any |x| >= 1/4
    """
    gamma = check_gamma(gamma)
    xs = np.asarray(x, dtype=np.float64)
    if not np.all(np.abs(xs) < ALPHA):
        raise DomainError(
            "z_inf_inverse is defined for |x| < 1/4",
            details={"max_abs_x": float(np.max(np.abs(xs)))},
        )
    lam = gamma / np.pi * np.arcsinh(np.tan(2.0 * np.pi * xs))
    residual = z_inf(lam, gamma) - xs
    polished = lam - residual / sigma_inf(lam, gamma)
    better = np.abs(z_inf(polished, gamma) - xs) < np.abs(residual)
    result = np.where(better, polished, lam)
    if result.ndim == 0:
        return float(result)
    return result  # type: ignore[no-any-return]


def kernel_fourier_s(omega: complex, gamma: float) -> complex:
    """Fourier transform of s': sinh((pi - gamma) w / 2) / sinh(pi w / 2).

    Beyond the strip |Im w| < 2 where the integral converges this is the
    analytic continuation.

    Raises:
        PoleError: At w = 2ik (k != 0) unless the numerator vanishes there too
    """
    gamma = check_gamma(gamma)
    return theta_fourier(omega, gamma / 2.0)


def kernel_fourier_r(omega: complex, gamma: float) -> complex:
    """Fourier transform of r': sinh((pi - 2 gamma) w / 2) / sinh(pi w / 2)."""
    gamma = check_gamma(gamma)
    return theta_fourier(omega, gamma)


def kernel_fourier_s_derivative(omega: complex, gamma: float) -> complex:
    """Derivative with respect to w of :func:`kernel_fourier_s`.

    Needed at w = i v_F when gamma = pi/n with n odd, where the transform
    itself vanishes.
    """
    gamma = check_gamma(gamma)
    a = (math.pi - gamma) / 2.0
    b = math.pi / 2.0
    w = complex(omega)
    if w == 0:
        return 0j
    den = cmath.sinh(b * w)
    if abs(den) < POLE_TOL:
        raise PoleError("derivative of the s' transform has a pole here", omega=omega)
    num = a * cmath.cosh(a * w) * den - b * cmath.sinh(a * w) * cmath.cosh(b * w)
    return num / (den * den)


def omega_set(gamma: float, cutoff: float) -> List[complex]:
    """Zeros of 1 + r'^ with modulus at most ``cutoff``.

    The union of {2 n i / (1 - gamma/pi)} and {(pi/gamma)(2m + 1) i} over
    integers n, m, deduplicated and sorted by modulus. The entry w = 0 is
    kept although 1 + r'^(0) = g is not zero.

    Args:
        gamma: Anisotropy in (0, pi)
        cutoff: Largest modulus kept, > 0

    Returns:
        List[complex]: Purely imaginary points
    """
    gamma = check_gamma(gamma)
    if cutoff <= 0:
        raise DomainError("cutoff must be positive", details={"cutoff": cutoff})
    limit = cutoff * (1.0 + 1e-12)
    candidates: List[float] = []

    step = 2.0 / (1.0 - gamma / math.pi)
    for n in range(int(limit // step) + 1):
        candidates.extend((n * step, -n * step))

    v_F = math.pi / gamma
    m = 0
    while (2 * m + 1) * v_F <= limit:
        value = (2 * m + 1) * v_F
        candidates.extend((value, -value))
        m += 1

    candidates.sort(key=lambda y: (abs(y), y))
    unique: List[float] = []
    for y in candidates:
        if unique and abs(y - unique[-1]) <= 1e-12 * max(1.0, abs(y)):
            continue
        unique.append(y)
    return [complex(0.0, y) for y in unique]


def kernel_constants(gamma: float) -> KernelConstants:
    """Constants r_inf, alpha, v_F and g of the thermodynamic limit.

    Args:
        gamma: Anisotropy in (0, pi)

    Returns:
        KernelConstants: Model constants
    """
    gamma = check_gamma(gamma)
    r_inf = 0.5 - gamma / math.pi
    return KernelConstants(
        gamma=gamma, r_inf=r_inf, alpha=ALPHA, v_F=math.pi / gamma, g=1.0 + 2.0 * r_inf
    )


def double_zero_index(gamma: float, tol: float = 1e-9) -> Optional[int]:
    """Return n when gamma = pi/n for an integer n >= 2, else None."""
    gamma = check_gamma(gamma)
    ratio = math.pi / gamma
    n = round(ratio)
    if n >= 2 and abs(ratio - n) <= tol * ratio:
        return int(n)
    return None


def is_double_zero(gamma: float, tol: float = 1e-9) -> bool:
    """Whether +-i v_F is a degenerate point of the amplitude formulas."""
    return double_zero_index(gamma, tol) is not None


def _sinh_ratio(a: float, b: float, omega: complex) -> complex:
    """sinh(a w) / sinh(b w) for b > |a|, continued through removable zeros."""
    w = complex(omega)
    # even in w
    if w.real < 0:
        w = -w
    if w == 0:
        return complex(a / b)
    if b * w.real > FOURIER_EXP_SWITCH:
        sign = 1.0 if a >= 0 else -1.0
        aa = abs(a)
        return (
            sign
            * cmath.exp((aa - b) * w)
            * (1.0 - cmath.exp(-2.0 * aa * w))
            / (1.0 - cmath.exp(-2.0 * b * w))
        )
    num = cmath.sinh(a * w)
    den = cmath.sinh(b * w)
    if abs(den) < POLE_TOL:
        if abs(num) < POLE_TOL:
            return a * cmath.cosh(a * w) / (b * cmath.cosh(b * w))
        raise PoleError(
            f"pole of the kernel transform at omega={omega}", omega=omega, details={"a": a, "b": b}
        )
    return num / den

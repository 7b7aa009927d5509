"""Observables of solved Bethe states."""

import math
from typing import Callable, Iterable, Tuple

import numpy as np
import numpy.typing as npt

from .cft import amplitudes
from .constants import ALPHA
from .exceptions import DomainError
from .kernel import FloatOrArray, double_zero_index, kernel_constants, s_fn, s_prime, sigma_inf
from .models import BetheState, ObservableRecord, StateClassification
from .solver import counting_function
from .states import classify
from .utils.cache import memoize
from .utils.quadrature import integrate_line
from .utils.validation import check_gamma

TestFunction = Callable[[npt.NDArray[np.float64]], FloatOrArray]


def functional_S(state: BetheState, func: TestFunction) -> float:
    """S_L(func) = (1/L) sum_i func(lambda_i).

    ``func`` is called once on the array of roots and may return a scalar.
    """
    roots = state.roots_array
    values = np.broadcast_to(np.asarray(func(roots), dtype=np.float64), roots.shape)
    return math.fsum(values.tolist()) / state.L


def energy(state: BetheState) -> float:
    """Energy per site e_L = -2 pi S_L(s')."""
    gamma = state.params.gamma
    return -2.0 * math.pi * functional_S(state, lambda lam: s_prime(lam, gamma))


def momentum(state: BetheState) -> float:
    """Momentum P_L = 2 pi S_L(s), with p_L = i P_L."""
    gamma = state.params.gamma
    return 2.0 * math.pi * functional_S(state, lambda lam: s_fn(lam, gamma))


def transfer_kernel(lam: float, gamma: float) -> TestFunction:
    """F_lam(mu) = log|sinh(i lam - mu - i gamma/2) / sinh(i lam - mu + i gamma/2)|.

    With t = exp(-2|mu|) this is
    (1/2) log((1 - 2 t cos(2 lam - gamma) + t^2) / (1 - 2 t cos(2 lam + gamma) + t^2)),
    finite for every real mu.
    """
    c_below = math.cos(2.0 * lam - gamma)
    c_above = math.cos(2.0 * lam + gamma)

    def kernel(mu: npt.NDArray[np.float64]) -> FloatOrArray:
        t = np.exp(-2.0 * np.abs(np.asarray(mu, dtype=np.float64)))
        return 0.5 * (  # type: ignore[no-any-return]
            np.log1p(t * (t - 2.0 * c_below)) - np.log1p(t * (t - 2.0 * c_above))
        )

    return kernel


def _check_spectral_parameter(lam: float, gamma: float) -> None:
    if not (-gamma / 2.0 < lam < 0.0):
        raise DomainError(
            f"spectral parameter must lie in (-gamma/2, 0), got {lam!r}",
            details={"lambda": lam, "gamma": gamma},
        )


def transfer_log_eigenvalue(state: BetheState, lam: float) -> float:
    """f_L(lam) = log sin(lam + gamma) + S_L(F_lam) for -gamma/2 < lam < 0.

    The exponentially smaller second term of the transfer-matrix eigenvalue
    is dropped.

    Raises:
        DomainError: Outside (-gamma/2, 0)
    """
    gamma = state.params.gamma
    _check_spectral_parameter(lam, gamma)
    return math.log(math.sin(lam + gamma)) + functional_S(state, transfer_kernel(lam, gamma))


@memoize("f_inf")
def f_infinity(gamma: float, lam: float) -> float:
    """Thermodynamic value log sin(lam + gamma) + int F_lam sigma_inf."""
    gamma = check_gamma(gamma)
    _check_spectral_parameter(lam, gamma)
    kernel = transfer_kernel(lam, gamma)
    integral = integrate_line(
        lambda mu: float(kernel(np.asarray(mu)) * sigma_inf(mu, gamma)), scale=gamma / math.pi
    )
    return math.log(math.sin(lam + gamma)) + integral


def s_infinity(func: TestFunction, gamma: float) -> float:
    """S_inf(func) = int func(lam) sigma_inf(lam) dlam by adaptive quadrature."""
    gamma = check_gamma(gamma)
    return integrate_line(
        lambda lam: float(np.asarray(func(np.asarray(lam))) * sigma_inf(lam, gamma)),
        scale=gamma / math.pi,
    )


def w_L(
    state: BetheState,
    func: TestFunction,
    func_hat_at: Callable[[complex], complex],
) -> Tuple[float, float]:
    """Finite-size remainder of S_L on a test function, measured and predicted.

    measured = S_L(func) - S_inf(func); predicted = A+ func^(i v_F) + A- func^(-i v_F).

    Args:
        state: Solved state
        func: Smooth test function decaying faster than any exponential
        func_hat_at: Analytic Fourier transform of func

    Returns:
        Tuple[float, float]: (measured, predicted)

    Raises:
        DomainError: At gamma = pi/n, where the amplitudes are degenerate
        QuadratureError: If S_inf cannot be computed
    """
    gamma = state.params.gamma
    if double_zero_index(gamma) is not None:
        raise DomainError(
            "the remainder prediction is degenerate at gamma = pi/n", details={"gamma": gamma}
        )
    measured = functional_S(state, func) - s_infinity(func, gamma)
    classification = classify(state.numbers, state.L)
    a_plus, a_minus = amplitudes(classification, state.phi_eff, gamma, state.L)
    v_F = kernel_constants(gamma).v_F
    predicted = a_plus * func_hat_at(1j * v_F) + a_minus * func_hat_at(-1j * v_F)
    return measured, float(complex(predicted).real)


def gaussian(width: float) -> Tuple[TestFunction, Callable[[complex], complex]]:
    """Gaussian test function exp(-x^2 / (2 width^2)) and its Fourier transform."""

    def func(x: npt.NDArray[np.float64]) -> FloatOrArray:
        return np.exp(-0.5 * (np.asarray(x) / width) ** 2)  # type: ignore[no-any-return]

    def func_hat(omega: complex) -> complex:
        return complex(width * math.sqrt(2.0 * math.pi)) * np.exp(-0.5 * (width * omega) ** 2)

    return func, func_hat


def positive_side_sum(state: BetheState) -> float:
    """S_L(z_L restricted to roots where z_L > 0)."""
    z = np.asarray(counting_function(state, state.roots_array), dtype=np.float64)
    return math.fsum(z[z > 0.0].tolist()) / state.L


def positive_side_sum_exact(classification: StateClassification, L: int) -> float:
    """Exact value alpha^2/2 - alpha n+/L + n+^2/(2 L^2) + Delta+ I / L^2."""
    n_plus = classification.n_plus
    return (
        ALPHA * ALPHA / 2.0
        - ALPHA * n_plus / L
        + n_plus * n_plus / (2.0 * L * L)
        + classification.delta_plus_I / (L * L)
    )


def observables(state: BetheState, lambdas: Iterable[float] = ()) -> ObservableRecord:
    """Energy, momentum and optionally f_L at the given spectral parameters."""
    e_L = energy(state)
    return ObservableRecord(
        e_L=e_L,
        E_L=state.L * e_L,
        P_L=momentum(state),
        f_L={float(lam): transfer_log_eigenvalue(state, lam) for lam in lambdas},
    )

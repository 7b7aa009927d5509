"""Closed-form finite-size predictions.

All formulas take the twist as given. For odd M the caller passes the
effective twist (see :func:`xxzlab.states.effective_twist`);
:func:`predict_state` does this automatically.
"""

import math
from typing import Tuple

from loguru import logger

from .constants import ALPHA
from .kernel import (
    double_zero_index,
    kernel_constants,
    kernel_fourier_s,
    kernel_fourier_s_derivative,
    s_prime,
    sigma_inf,
)
from .models import BetheNumberSet, CftPrediction, ModelParams, StateClassification
from .states import classify, effective_twist
from .utils.cache import memoize
from .utils.quadrature import integrate_line
from .utils.validation import check_gamma


@memoize("e_inf")
def e_infinity(gamma: float) -> float:
    """Thermodynamic energy per site -2 pi int s'(lam) sigma_inf(lam) dlam.

    Args:
        gamma: Anisotropy in (0, pi)

    Returns:
        float: e_inf, negative

    Raises:
        QuadratureError: If the quadrature does not converge
    """
    gamma = check_gamma(gamma)
    scale = max(1.0, gamma / math.pi)
    integral = integrate_line(
        lambda lam: float(s_prime(lam, gamma) * sigma_inf(lam, gamma)), scale=scale
    )
    return -2.0 * math.pi * integral


def conformal_weights(
    classification: StateClassification, phi: float, gamma: float
) -> Tuple[float, float]:
    """Conformal weights (h, h_bar).

    h, h_bar = (1/8) ((n+ + n-) sqrt(g) +- (n+ - n- + 2 phi) / sqrt(g))^2 + Delta+- I,
    assembled from the cancellation-free sum and difference.

    Args:
        classification: Vacancy counts and descendant levels
        phi: Twist
        gamma: Anisotropy

    Returns:
        Tuple[float, float]: (h, h_bar)
    """
    total = weight_sum(classification, phi, gamma)
    spin = weight_difference(classification, phi)
    return 0.5 * (total + spin), 0.5 * (total - spin)


def weight_sum(classification: StateClassification, phi: float, gamma: float) -> float:
    """h + h_bar = (1/4)((n+ + n-)^2 g + (n+ - n- + 2 phi)^2 / g) + Delta+ I + Delta- I."""
    g = kernel_constants(gamma).g
    n_sum = classification.charge_sum
    n_twist = classification.charge_difference + 2.0 * phi
    return math.fsum(
        (
            0.25 * n_sum * n_sum * g,
            0.25 * n_twist * n_twist / g,
            classification.delta_plus_I,
            classification.delta_minus_I,
        )
    )


def weight_difference(classification: StateClassification, phi: float) -> float:
    """h - h_bar = (1/2)(n+ + n-)(n+ - n- + 2 phi) + Delta+ I - Delta- I."""
    n_sum = classification.charge_sum
    n_twist = classification.charge_difference + 2.0 * phi
    return math.fsum(
        (0.5 * n_sum * n_twist, classification.delta_plus_I, -classification.delta_minus_I)
    )


def central_charge(phi: float, gamma: float) -> float:
    """Effective central charge 1 - 12 phi^2 / g."""
    return 1.0 - 12.0 * phi * phi / kernel_constants(gamma).g


def energy_block_sum(classification: StateClassification, phi: float, gamma: float) -> float:
    """h + h_bar as it appears next to c in the energy expansion.

    (1/4)((n+ + n-)^2 g + (n+ - n- + 4 phi)(n+ - n-) / g) + Delta+ I + Delta- I;
    c - 12 times this equals 1 - 12 (h + h_bar) of :func:`conformal_weights`.
    """
    g = kernel_constants(gamma).g
    n_sum = classification.charge_sum
    n_diff = classification.charge_difference
    return math.fsum(
        (
            0.25 * n_sum * n_sum * g,
            0.25 * (n_diff + 4.0 * phi) * n_diff / g,
            classification.delta_plus_I,
            classification.delta_minus_I,
        )
    )


def z_L_zero_prediction(
    classification: StateClassification, phi: float, gamma: float, L: int
) -> float:
    """z_L(0) at order 1/L: (phi - r_inf (n+ - n-)) / ((1 + 2 r_inf) L)."""
    k = kernel_constants(gamma)
    return (phi - k.r_inf * classification.charge_difference) / (k.g * L)


def amplitudes(
    classification: StateClassification, phi: float, gamma: float, L: int
) -> Tuple[float, float]:
    """Amplitudes (A+, A-) of the finite-size remainder at w = +-i v_F.

    When gamma = pi/n the transform s'^(i v_F) is degenerate. For odd n it
    vanishes and is replaced by its derivative along the imaginary axis; for
    even n it has a pole and both amplitudes take their limit, zero.

    Args:
        classification: Vacancy counts and descendant levels
        phi: Twist
        gamma: Anisotropy
        L: Chain length

    Returns:
        Tuple[float, float]: (A+, A-), both O(L^-2)
    """
    k = kernel_constants(gamma)
    n = double_zero_index(gamma)
    if n is not None and n % 2 == 0:
        return 0.0, 0.0
    if n is None:
        transform = kernel_fourier_s(1j * k.v_F, gamma).real
    else:
        # i d/dw at w = i v_F is the derivative along the imaginary axis
        transform = (1j * kernel_fourier_s_derivative(1j * k.v_F, gamma)).real

    n_sum = classification.charge_sum
    n_twist = classification.charge_difference + 2.0 * phi
    bracket_sum = math.fsum(
        (
            -1.0,
            3.0 * n_sum * n_sum * k.g,
            3.0 * n_twist * n_twist / k.g,
            12.0 * (classification.delta_plus_I + classification.delta_minus_I),
        )
    )
    bracket_diff = math.fsum(
        (
            -0.5 * n_sum * n_twist,
            classification.delta_minus_I,
            -classification.delta_plus_I,
        )
    )
    total = -k.v_F / (12.0 * L * L * transform) * bracket_sum
    difference = -k.v_F / (L * L * transform) * bracket_diff
    return 0.5 * (total + difference), 0.5 * (total - difference)


def energy_prediction(
    classification: StateClassification, phi: float, gamma: float, L: int
) -> float:
    """e_inf - (pi v_F / (6 L^2)) (1 - 12 (h + h_bar))."""
    k = kernel_constants(gamma)
    coefficient = 1.0 - 12.0 * weight_sum(classification, phi, gamma)
    return e_infinity(gamma) - math.pi * k.v_F / (6.0 * L * L) * coefficient


def momentum_prediction(
    classification: StateClassification, phi: float, gamma: float, L: int
) -> float:
    """-(2 pi / L) alpha (n+ - n- + 2 phi) + (2 pi / L^2)(h - h_bar), real convention."""
    n_twist = classification.charge_difference + 2.0 * phi
    return (
        -2.0 * math.pi / L * ALPHA * n_twist
        + 2.0 * math.pi / (L * L) * weight_difference(classification, phi)
    )


def predict(
    classification: StateClassification, phi: float, gamma: float, L: int
) -> CftPrediction:
    """Every prediction for one configuration.

    Args:
        classification: Vacancy counts and descendant levels
        phi: Twist, effective twist for odd M
        gamma: Anisotropy
        L: Chain length

    Returns:
        CftPrediction: Predicted constants and observables
    """
    gamma = check_gamma(gamma)
    k = kernel_constants(gamma)
    double_zero = double_zero_index(gamma) is not None
    if double_zero:
        logger.warning(f"gamma = pi/{double_zero_index(gamma)}: amplitudes use the degenerate form")
    h, h_bar = conformal_weights(classification, phi, gamma)
    a_plus, a_minus = amplitudes(classification, phi, gamma, L)
    return CftPrediction(
        gamma=gamma,
        phi=phi,
        L=L,
        v_F=k.v_F,
        g=k.g,
        e_inf=e_infinity(gamma),
        z_L0=z_L_zero_prediction(classification, phi, gamma, L),
        c=central_charge(phi, gamma),
        h=h,
        h_bar=h_bar,
        e_L_pred=energy_prediction(classification, phi, gamma, L),
        P_L_pred=momentum_prediction(classification, phi, gamma, L),
        A_plus=a_plus,
        A_minus=a_minus,
        double_zero=double_zero,
    )


def predict_state(numbers: BetheNumberSet, params: ModelParams) -> CftPrediction:
    """Predictions for a configuration, using its effective twist."""
    classification = classify(numbers, params.L)
    phi_eff = effective_twist(params.phi, numbers)
    return predict(classification, phi_eff, params.gamma, params.L)

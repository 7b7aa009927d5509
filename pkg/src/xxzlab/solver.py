"""Damped Newton solver for the logarithmic Bethe equations.

Solves z_L(lambda_i) = I_i / L for real roots, with

    z_L(lam) = s(lam) - (1/L) sum_j r(lam - lambda_j) + phi_eff / L.
"""

from typing import Optional, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt
import scipy.linalg
from loguru import logger

from .constants import ALPHA, MAX_DENSE_ROOTS
from .exceptions import DomainError, NonConvergenceError, OrderViolationError, ValidationError
from .kernel import FloatOrArray, r_fn, r_prime, s_fn, s_prime, z_inf_inverse
from .models import BetheNumberSet, BetheState, ModelParams, SolverOptions
from .states import effective_twist
from .utils.retry import attempt_damping, solve_retrying

Array = npt.NDArray[np.float64]


def counting_function(
    state_or_roots: Union[BetheState, Sequence[float], Array],
    lam: FloatOrArray,
    params: Optional[ModelParams] = None,
    numbers: Optional[BetheNumberSet] = None,
) -> FloatOrArray:
    """Evaluate the finite-size counting function z_L.

    Args:
        state_or_roots: Solved state, or trial roots together with ``params``
        lam: Point(s) of evaluation
        params: Model parameters, required for trial roots
        numbers: Bethe numbers fixing the half shift of the twist, required
            for trial roots when M is odd

    Returns:
        z_L(lam)
    """
    if isinstance(state_or_roots, BetheState):
        roots = state_or_roots.roots_array
        params = state_or_roots.params
        phi_eff = state_or_roots.phi_eff
    else:
        if params is None:
            raise ValidationError("params are required when passing trial roots")
        roots = np.asarray(state_or_roots, dtype=np.float64)
        if numbers is not None:
            phi_eff = effective_twist(params.phi, numbers)
        elif params.M % 2 == 0:
            phi_eff = params.phi
        else:
            raise ValidationError(
                "numbers are required for trial roots when M is odd", details={"M": params.M}
            )
    if not np.all(np.isfinite(roots)):
        raise DomainError("trial roots must be finite")
    x = np.asarray(lam, dtype=np.float64)
    interaction = np.sum(r_fn(x[..., None] - roots, params.gamma), axis=-1)
    z = s_fn(x, params.gamma) - interaction / params.L + phi_eff / params.L
    if np.ndim(z) == 0:
        return float(z)
    return z  # type: ignore[no-any-return]


def residuals(roots: Array, numbers: BetheNumberSet, params: ModelParams) -> Array:
    """F_i = z_L(lambda_i) - I_i / L."""
    L = params.L
    diff = roots[:, None] - roots[None, :]
    z = (
        s_fn(roots, params.gamma)
        - np.sum(r_fn(diff, params.gamma), axis=1) / L
        + effective_twist(params.phi, numbers) / L
    )
    targets = np.asarray(numbers.doubled, dtype=np.float64) / (2.0 * L)
    return np.asarray(z - targets, dtype=np.float64)


def jacobian(roots: Array, params: ModelParams) -> Array:
    """Exact Jacobian dF_i / d lambda_j of :func:`residuals`.

    Diagonal s'(lambda_i) - (1/L) sum_{j != i} r'(lambda_i - lambda_j),
    off-diagonal (1/L) r'(lambda_i - lambda_j).
    """
    L = params.L
    rp = np.asarray(r_prime(roots[:, None] - roots[None, :], params.gamma), dtype=np.float64)
    np.fill_diagonal(rp, 0.0)
    jac = rp / L
    jac[np.diag_indices_from(jac)] = s_prime(roots, params.gamma) - rp.sum(axis=1) / L
    return jac


def initial_guess(params: ModelParams, numbers: BetheNumberSet) -> Array:
    """Thermodynamic guess lambda_i = z_inf^{-1}(I_i / L).

    Numbers with |I|/L >= 1/4 - 1/(2L) are clamped to that value; clamped
    entries beyond the innermost are spaced outward by 1/v_F so that the guess
    stays strictly ordered.

    Args:
        params: Model parameters
        numbers: Bethe numbers

    Returns:
        Array: Initial roots, increasing
    """
    L = params.L
    doubled = np.asarray(numbers.doubled, dtype=np.int64)
    cap = ALPHA - 1.0 / (2.0 * L)
    x = np.clip(doubled / (2.0 * L), -cap, cap)
    guess = np.asarray(z_inf_inverse(x, params.gamma), dtype=np.float64)

    # 2|d| >= L - 2  <=>  |I|/L >= 1/4 - 1/(2L)
    clamped = 2 * np.abs(doubled) >= L - 2
    if np.any(clamped):
        spacing = params.gamma / np.pi
        top = np.flatnonzero(clamped & (doubled > 0))
        bottom = np.flatnonzero(clamped & (doubled < 0))[::-1]
        guess[top] += spacing * np.arange(top.size)
        guess[bottom] -= spacing * np.arange(bottom.size)
        logger.debug(f"Initial guess clamped {int(clamped.sum())} root(s) at L={L}")
    return guess


def solve(
    params: ModelParams,
    numbers: BetheNumberSet,
    options: Optional[SolverOptions] = None,
    initial_roots: Optional[Union[Sequence[float], Array]] = None,
) -> BetheState:
    """Solve the Bethe equations for real roots.

    Damped Newton with backtracking on ||F||_2. A failed attempt is retried
    from the thermodynamic guess with the damping halved. Root ordering is
    checked only after convergence.

    Args:
        params: Model parameters
        numbers: Bethe numbers, one per root
        options: Solver options
        initial_roots: Starting point, e.g. roots of a nearby twist

    Returns:
        BetheState: Converged state

    Raises:
        NonConvergenceError: If no attempt reaches the tolerance
        OrderViolationError: If the converged roots are not increasing
        ValidationError: If numbers and params disagree
    """
    options = options or SolverOptions()
    if numbers.M != params.M:
        raise ValidationError(
            f"{numbers.M} Bethe numbers given for M={params.M}",
            details={"numbers": numbers.M, "M": params.M},
        )
    if params.M > MAX_DENSE_ROOTS:
        raise ValidationError(f"M={params.M} exceeds the dense solver limit {MAX_DENSE_ROOTS}")

    start: Optional[Array] = None
    if initial_roots is not None:
        start = np.array(initial_roots, dtype=np.float64)
        if start.shape != (params.M,) or not np.all(np.isfinite(start)):
            raise ValidationError("initial_roots must be M finite values")

    roots: Array = np.empty(0)
    iterations = 0
    residual = float("inf")
    for attempt in solve_retrying(options.retries + 1):
        with attempt:
            number = attempt.retry_state.attempt_number
            damping = attempt_damping(options.damping, number)
            x0 = start if (start is not None and number == 1) else initial_guess(params, numbers)
            roots, iterations, residual = _newton(params, numbers, x0, options, damping)

    violations = np.flatnonzero(np.diff(roots) <= 0.0)
    if violations.size:
        raise OrderViolationError(
            int(violations[0]), details={"L": params.L, "doubled": list(numbers.doubled)}
        )

    logger.debug(f"Solved L={params.L} M={params.M} in {iterations} iterations ({residual:.2e})")
    return BetheState(
        params=params,
        numbers=numbers,
        roots=tuple(float(v) for v in roots),
        phi_eff=effective_twist(params.phi, numbers),
        residual_max=residual,
        iterations=iterations,
    )


def _newton(
    params: ModelParams,
    numbers: BetheNumberSet,
    x0: Array,
    options: SolverOptions,
    damping: float,
) -> Tuple[Array, int, float]:
    """Newton iteration; returns roots, iteration count and max-norm residual."""
    x = np.array(x0, dtype=np.float64)
    F = residuals(x, numbers, params)
    if not np.all(np.isfinite(F)):
        raise NonConvergenceError(0, float("inf"), details={"reason": "non-finite start"})

    for iteration in range(options.max_iter):
        res = float(np.max(np.abs(F)))
        if res < options.tol:
            return x, iteration, res
        try:
            step = scipy.linalg.solve(jacobian(x, params), -F, check_finite=False)
        except (np.linalg.LinAlgError, ValueError) as e:
            raise NonConvergenceError(iteration, res, details={"reason": "singular"}, cause=e)

        norm = float(np.linalg.norm(F))
        t = damping
        for _ in range(options.max_halvings + 1):
            trial = x + t * step
            F_trial = residuals(trial, numbers, params)
            if np.all(np.isfinite(F_trial)) and np.linalg.norm(F_trial) < norm:
                x, F = trial, F_trial
                break
            t /= 2.0
        else:
            raise NonConvergenceError(iteration, res, details={"reason": "line search stalled"})
        logger.debug(f"Newton iteration {iteration + 1}: step {t:.3g}, residual {res:.3e}")

    res = float(np.max(np.abs(F)))
    if res < options.tol:
        return x, options.max_iter, res
    raise NonConvergenceError(options.max_iter, res, details={"L": params.L, "M": params.M})

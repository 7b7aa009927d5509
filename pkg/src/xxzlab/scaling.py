"""Finite-size scans and extrapolation of 1/L^2 amplitudes."""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt
from loguru import logger

from .cft import predict_state
from .config import RunConfig
from .constants import ALPHA
from .exceptions import ScalingError, ValidationError, XXZLabError
from .models import (
    AmplitudeFit,
    BetheNumberSet,
    BetheState,
    CftPrediction,
    ModelParams,
    ScanMetadata,
    ScanSeries,
    SolverOptions,
    StateClassification,
)
from .observables import energy, momentum
from .solver import counting_function, initial_guess, solve

RATIO_TOL = 1e-12


def check_canonical_lengths(config: RunConfig, lengths: Sequence[int]) -> None:
    """Recipe states are only defined on chains whose length is a multiple of 4.

    Raises:
        ValidationError: Listing the offending lengths
    """
    if not config.canonical:
        return
    bad = [L for L in lengths if L % 4]
    if bad:
        raise ValidationError(
            f"canonical scans need chain lengths divisible by 4, got {bad}",
            details={"L": bad},
        )


def scan(
    config: RunConfig,
    L_values: Optional[Sequence[int]] = None,
    options: Optional[SolverOptions] = None,
    warm_start: Optional[bool] = None,
    workers: Optional[int] = None,
) -> ScanSeries:
    """Solve the configured state at every chain length.

    With warm starts the solves run in order of increasing L, each seeded by
    the previous roots: the deviation from the thermodynamic guess is
    interpolated in I/L. Cold scans may run in parallel.

    Args:
        config: Run configuration
        L_values: Chain lengths, defaults to those of the configuration
        options: Solver options, defaults to those of the configuration
        warm_start: Override of config.warm_start
        workers: Override of config.workers

    Returns:
        ScanSeries: One record per chain length

    Raises:
        ValidationError: If a chain length does not admit the state
        SolverError: From the solve at the offending L, with L in its details
    """
    lengths = tuple(sorted(config.lengths() if L_values is None else L_values))
    if len(set(lengths)) != len(lengths):
        raise ValidationError("chain lengths must be distinct", details={"L": lengths})
    options = options or config.solver
    warm = config.warm_start if warm_start is None else warm_start
    workers = config.workers if workers is None else workers
    metadata = ScanMetadata(
        gamma=config.gamma, phi=config.phi, template=config.state, warm_start=warm
    )
    if not lengths:
        return ScanSeries(metadata=metadata)
    check_canonical_lengths(config, lengths)

    states: List[BetheState] = []
    if warm:
        previous: Optional[BetheState] = None
        for L in lengths:
            previous = _solve_at(config, L, options, previous)
            states.append(previous)
    elif workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            states = list(pool.map(lambda L: _solve_at(config, L, options, None), lengths))
    else:
        states = [_solve_at(config, L, options, None) for L in lengths]

    return ScanSeries(
        L_values=lengths,
        e_values=tuple(energy(state) for state in states),
        P_values=tuple(momentum(state) for state in states),
        z0_values=tuple(float(counting_function(state, 0.0)) for state in states),
        residuals=tuple(state.residual_max for state in states),
        iterations=tuple(state.iterations for state in states),
        metadata=metadata,
    )


def _solve_at(
    config: RunConfig, L: int, options: SolverOptions, previous: Optional[BetheState]
) -> BetheState:
    try:
        numbers = config.numbers_for(L)
        params = config.params_for(L, numbers)
        start = None if previous is None else _warm_guess(previous, params, numbers)
        state = solve(params, numbers, options, initial_roots=start)
    except XXZLabError as e:
        e.details = {**(e.details or {}), "L": L}
        logger.error(f"Scan failed at L={L}: {e}")
        raise
    logger.info(f"L={L}: {state.iterations} iterations, residual {state.residual_max:.2e}")
    return state


def _warm_guess(
    previous: BetheState, params: ModelParams, numbers: BetheNumberSet
) -> npt.NDArray[np.float64]:
    """Thermodynamic guess corrected by the previous deviation, interpolated in I/L."""
    x_prev = np.asarray(previous.numbers.doubled, dtype=np.float64) / (2.0 * previous.L)
    deviation = previous.roots_array - initial_guess(previous.params, previous.numbers)
    x_new = np.asarray(numbers.doubled, dtype=np.float64) / (2.0 * params.L)
    guess = initial_guess(params, numbers) + np.interp(x_new, x_prev, deviation)
    if np.any(np.diff(guess) <= 0.0):
        return initial_guess(params, numbers)
    return guess


def predict_scan(
    config: RunConfig, L_values: Optional[Sequence[int]] = None
) -> List[CftPrediction]:
    """Analytic predictions at every chain length, without solving."""
    lengths = tuple(sorted(config.lengths() if L_values is None else L_values))
    check_canonical_lengths(config, lengths)
    predictions = []
    for L in lengths:
        numbers = config.numbers_for(L)
        predictions.append(predict_state(numbers, config.params_for(L, numbers)))
    return predictions


def raw_amplitudes(series: ScanSeries, e_inf: float, v_F: float) -> List[float]:
    """a(L) = -6 L^2 (e_L - e_inf) / (pi v_F)."""
    return [
        -6.0 * L * L * (e - e_inf) / (math.pi * v_F)
        for L, e in zip(series.L_values, series.e_values)
    ]


def richardson(
    L_values: Sequence[int], values: Sequence[float]
) -> Tuple[List[float], Optional[float]]:
    """Extrapolate a(L) = x + b L^-p from successive triples.

    The chain lengths must form a geometric sequence. For each triple the
    ratio of successive differences gives q^p, and x follows by eliminating b.

    Args:
        L_values: Geometric sequence of chain lengths
        values: a(L) per chain length

    Returns:
        Tuple[List[float], Optional[float]]: One extrapolant per triple, and the
        exponent p of the last triple (None if it is undefined)

    Raises:
        ScalingError: With fewer than three points or a non-geometric sequence
    """
    if len(values) != len(L_values):
        raise ScalingError("values and chain lengths are not aligned")
    if len(values) < 3:
        raise ScalingError(
            f"extrapolation needs at least 3 points, got {len(values)}",
            details={"points": len(values)},
        )
    ratio = L_values[1] / L_values[0]
    for a, b in zip(L_values, L_values[1:]):
        if abs(b / a - ratio) > RATIO_TOL * ratio:
            raise ScalingError(
                "chain lengths must form a geometric sequence", details={"L": list(L_values)}
            )

    extrapolants: List[float] = []
    exponent: Optional[float] = None
    for a1, a2, a3 in zip(values, values[1:], values[2:]):
        d1, d2 = a2 - a1, a3 - a2
        if d2 == 0.0 or d1 == d2:
            extrapolants.append(a3)
            exponent = None
            continue
        rho = d1 / d2
        extrapolants.append(a3 + d2 / (rho - 1.0))
        exponent = math.log(rho) / math.log(ratio) if rho > 0.0 else None
    return extrapolants, exponent


def _fit(quantity: str, L_values: Tuple[int, ...], raw: List[float]) -> AmplitudeFit:
    extrapolants, exponent = richardson(L_values, raw)
    x_eff = extrapolants[-1]
    if len(extrapolants) > 1:
        error = abs(extrapolants[-1] - extrapolants[-2])
    else:
        error = abs(extrapolants[-1] - raw[-1])
    logger.info(f"{quantity} amplitude {x_eff:.10g} +- {error:.2e} (exponent {exponent})")
    return AmplitudeFit(
        quantity=quantity,
        x_eff=x_eff,
        L_values=L_values,
        raw_amplitudes=tuple(raw),
        extrapolants=tuple(extrapolants),
        exponent=exponent,
        extrapolation_error=error,
    )


def extract_amplitude(series: ScanSeries, e_inf: float, v_F: float) -> AmplitudeFit:
    """Extrapolated energy amplitude, an estimate of c - 12 (h + h_bar).

    Args:
        series: Scan over a geometric L sequence, at least 3 points
        e_inf: Thermodynamic energy per site
        v_F: Fermi velocity

    Returns:
        AmplitudeFit: Raw amplitudes, extrapolants and the estimate

    Raises:
        ScalingError: With fewer than three points
    """
    return _fit("energy", series.L_values, raw_amplitudes(series, e_inf, v_F))


def extract_momentum_amplitude(
    series: ScanSeries, classification: StateClassification, phi: float
) -> AmplitudeFit:
    """Extrapolated momentum amplitude, an estimate of h - h_bar.

    Raw values are L^2 (P_L + 2 pi alpha (n+ - n- + 2 phi) / L) / (2 pi); ``phi``
    is the effective twist of the scanned state.
    """
    n_twist = classification.charge_difference + 2.0 * phi
    raw = [
        L * L * (P + 2.0 * math.pi * ALPHA * n_twist / L) / (2.0 * math.pi)
        for L, P in zip(series.L_values, series.P_values)
    ]
    return _fit("momentum", series.L_values, raw)

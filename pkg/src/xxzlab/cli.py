"""Command-line interface.

Examples:
  xxzlab solve --gamma 0.5pi --L 8 --ground
  xxzlab solve --gamma 0.5pi --L 8 --numbers -3,-1,1,3
  xxzlab scan --gamma 0.55pi --L-values 64 128 256 512 --csv scan.csv
  xxzlab ed --gamma 0.5pi --L 8 --M 4 --match
  xxzlab char --m 2 --kmax 5
  xxzlab verify --gamma 0.55pi --all --L 1024
  xxzlab predict --gamma 3/7pi --L 64 --n-plus 1 --n-minus 0
"""

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from loguru import logger

from .characters import movable_count, partial_character, verify_degeneracy
from .cft import e_infinity, predict_state
from .config import RunConfig
from .constants import (
    CHAR_CSV_COLUMNS,
    DEFAULT_GAUSSIAN_WIDTH,
    DEFAULT_MATCH_TOL,
    DEFAULT_VERIFY_L,
    FLOAT_FORMAT,
    SCAN_CSV_COLUMNS,
)
from .ed import build_and_diagonalize, match_bethe
from .exceptions import ConfigurationError, ValidationError, XXZLabError
from .kernel import double_zero_index, kernel_constants
from .models import BetheState, CheckResult, ScanSeries, VerifyReport
from .observables import gaussian, observables, positive_side_sum, positive_side_sum_exact, w_L
from .scaling import (
    extract_amplitude,
    extract_momentum_amplitude,
    predict_scan,
    raw_amplitudes,
    scan,
)
from .solver import counting_function, solve
from .states import classify, effective_twist, ground_state_numbers
from .types import LogLevel
from .utils.logging import setup_logging
from .utils.validation import validate_model

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

WL_RATIO_TOL = 0.05
SIDE_SUM_TOL = 1e-10
ED_CHECK_L = 8
DEGENERACY_K_MAX = 5


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per task."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", type=Path, help="JSON or TOML run configuration; flags override it"
    )
    common.add_argument("--gamma", help="Anisotropy in radians, or e.g. 0.55pi, 3/7pi, pi/5")
    common.add_argument("--phi", type=float, help="Boundary twist")
    common.add_argument("--L", type=int, help="Chain length")
    common.add_argument("--L-values", type=int, nargs="+", dest="L_values", help="Chain lengths")
    common.add_argument("--output", type=Path, help="JSON output file (default: stdout)")
    common.add_argument("--log-level", choices=[level.value for level in LogLevel])
    common.add_argument("--tol", type=float, help="Newton residual tolerance")
    common.add_argument("--max-iter", type=int, help="Newton iteration cap")

    state = argparse.ArgumentParser(add_help=False)
    group = state.add_mutually_exclusive_group()
    group.add_argument("--ground", action="store_true", help="Ground state (default)")
    group.add_argument("--numbers", help="Doubled Bethe numbers, comma separated, e.g. -3,-1,1,3")
    state.add_argument("--n-plus", type=float, help="Vacancies on the positive side")
    state.add_argument("--n-minus", type=float, help="Vacancies on the negative side")
    state.add_argument("--delta-plus", type=int, help="Descendant level on the positive side")
    state.add_argument("--delta-minus", type=int, help="Descendant level on the negative side")

    parser = argparse.ArgumentParser(prog="xxzlab", description="XXZ Bethe ansatz numerical lab")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common, state], help="Solve one state")
    p.add_argument(
        "--lam", type=float, action="append", default=[], help="Spectral parameter for f_L"
    )

    p = sub.add_parser("scan", parents=[common, state], help="Finite-size scan and fit")
    p.add_argument("--csv", type=Path, help="Per-L CSV table")
    p.add_argument("--plot-data", type=Path, help="Two-column L vs amplitude file")
    p.add_argument("--predict-only", action="store_true", help="Analytic columns only")
    p.add_argument("--cold", action="store_true", help="Disable warm starts")
    p.add_argument("--workers", type=int, help="Parallel solves for cold scans")

    p = sub.add_parser("ed", parents=[common, state], help="Exact diagonalization of a sector")
    p.add_argument("--M", type=int, help="Number of down spins (default L/2)")
    p.add_argument("--match", action="store_true", help="Match the configured Bethe state")
    p.add_argument("--match-tol", type=float, default=DEFAULT_MATCH_TOL)

    p = sub.add_parser("char", parents=[common], help="Partial character table")
    p.add_argument("--m", type=int, help="Largest part; derived from --n-plus/--n-minus if unset")
    p.add_argument("--kmax", type=int, default=10, help="Highest level")
    p.add_argument("--n-plus", type=int, help="Vacancies on the positive side")
    p.add_argument("--n-minus", type=int, help="Vacancies on the negative side")
    p.add_argument("--csv", type=Path, help="CSV table with columns k, p_m")

    p = sub.add_parser("verify", parents=[common], help="Numerical checks with a verdict")
    p.add_argument("--all", action="store_true", help="Also run the ED and side-sum checks")
    p.add_argument("--width", type=float, default=DEFAULT_GAUSSIAN_WIDTH)

    sub.add_parser("predict", parents=[common, state], help="Closed-form predictions")
    return parser


def _state_override(args: argparse.Namespace) -> Optional[Dict[str, Any]]:
    numbers = getattr(args, "numbers", None)
    if numbers:
        try:
            doubled = [int(part) for part in numbers.split(",") if part.strip()]
        except ValueError as e:
            raise ConfigurationError(f"cannot parse --numbers {numbers!r}", cause=e) from e
        return {"kind": "numbers", "numbers": doubled}
    n_plus = getattr(args, "n_plus", None)
    n_minus = getattr(args, "n_minus", None)
    if args.command != "char" and (n_plus is not None or n_minus is not None):
        return {
            "kind": "excitation",
            "n_plus": n_plus or 0.0,
            "n_minus": n_minus or 0.0,
            "delta_plus": getattr(args, "delta_plus", None) or 0,
            "delta_minus": getattr(args, "delta_minus", None) or 0,
        }
    if getattr(args, "ground", False):
        return {"kind": "ground"}
    return None


def load_config(args: argparse.Namespace) -> RunConfig:
    """Run configuration from --config and the flags, flags taking precedence.

    Raises:
        ConfigurationError: If the configuration file is unreadable
        ValidationError: If the resulting configuration is invalid
    """
    solver = {
        key: value
        for key, value in (("tol", args.tol), ("max_iter", args.max_iter))
        if value is not None
    }
    overrides: Dict[str, Any] = {
        "gamma": args.gamma,
        "phi": args.phi,
        "L": args.L,
        "L_values": args.L_values,
        "output": args.output,
        "log_level": args.log_level,
        "state": _state_override(args),
        "solver": solver or None,
        "M": getattr(args, "M", None),
        "csv": getattr(args, "csv", None),
        "plot_data": getattr(args, "plot_data", None),
        "workers": getattr(args, "workers", None),
        "warm_start": False if getattr(args, "cold", False) else None,
    }
    if args.config is not None:
        return RunConfig.from_file(args.config, **overrides)
    return validate_model(RunConfig, {k: v for k, v in overrides.items() if v is not None})


def _dumps(document: Any) -> str:
    # json writes floats with repr, the shortest string that reads back to the same double
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def _emit(document: Any, path: Optional[Path]) -> None:
    text = _dumps(document)
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else format(value, FLOAT_FORMAT)


def _write_table(path: Path, header: Sequence[str], rows: List[List[str]]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    path.write_text(buffer.getvalue(), encoding="utf-8")
    logger.info(f"Wrote {path}")


def cmd_solve(config: RunConfig, args: argparse.Namespace) -> int:
    """Solve one state and emit roots, observables, predictions and deltas."""
    L = config.single_length()
    numbers = config.numbers_for(L)
    params = config.params_for(L, numbers)
    state = solve(params, numbers, config.solver)
    record = observables(state, args.lam)
    prediction = predict_state(numbers, params)
    z0 = float(counting_function(state, 0.0))
    document = {
        "params": params.model_dump(mode="json"),
        "numbers": list(numbers.doubled),
        "classification": classify(numbers, L).model_dump(mode="json"),
        "roots": list(state.roots),
        "phi_eff": state.phi_eff,
        "residual": state.residual_max,
        "iterations": state.iterations,
        "e_L": record.e_L,
        "E_L": record.E_L,
        "P_L": record.P_L,
        "f_L": {format(lam, FLOAT_FORMAT): value for lam, value in record.f_L.items()},
        "z_L0": z0,
        "predictions": prediction.model_dump(mode="json"),
        "deltas": {
            "e_L": record.e_L - prediction.e_L_pred,
            "P_L": record.P_L - prediction.P_L_pred,
            "z_L0": z0 - prediction.z_L0,
        },
    }
    _emit(document, config.output)
    return EXIT_OK


def cmd_scan(config: RunConfig, args: argparse.Namespace) -> int:
    """Scan chain lengths, write the CSV table and the amplitude fits."""
    predictions = predict_scan(config)
    k = kernel_constants(config.gamma)
    e_inf = e_infinity(config.gamma)

    if args.predict_only:
        rows = [
            [str(p.L), "", _fmt(p.e_L_pred), "", "", _fmt(p.P_L_pred)] for p in predictions
        ]
        if config.csv is not None:
            _write_table(config.csv, SCAN_CSV_COLUMNS, rows)
        _emit({"predictions": [p.model_dump(mode="json") for p in predictions]}, config.output)
        return EXIT_OK

    series = scan(config)
    amplitudes = raw_amplitudes(series, e_inf, k.v_F)
    rows = [
        [str(L), _fmt(e), _fmt(p.e_L_pred), _fmt(a), _fmt(P), _fmt(p.P_L_pred)]
        for L, e, a, P, p in zip(
            series.L_values, series.e_values, amplitudes, series.P_values, predictions
        )
    ]
    if config.csv is not None:
        _write_table(config.csv, SCAN_CSV_COLUMNS, rows)
    if config.plot_data is not None:
        lines = [f"{L} {_fmt(a)}\n" for L, a in zip(series.L_values, amplitudes)]
        config.plot_data.write_text("".join(lines), encoding="utf-8")

    document: Dict[str, Any] = {"series": series.model_dump(mode="json"), "fits": {}}
    if len(series) >= 3:
        document["fits"] = _scan_fits(config, series, e_inf, k.v_F)
        if predictions:
            document["fits"]["energy"]["predicted"] = predictions[-1].scaling_coefficient
            document["fits"]["momentum"]["predicted"] = predictions[-1].spin
    else:
        logger.warning("Fewer than 3 chain lengths: no amplitude fit")
    _emit(document, config.output)
    return EXIT_OK


def _scan_fits(
    config: RunConfig, series: ScanSeries, e_inf: float, v_F: float
) -> Dict[str, Dict[str, Any]]:
    L = series.L_values[-1]
    numbers = config.numbers_for(L)
    phi_eff = effective_twist(config.phi, numbers)
    energy_fit = extract_amplitude(series, e_inf, v_F)
    momentum_fit = extract_momentum_amplitude(series, classify(numbers, L), phi_eff)
    return {"energy": energy_fit.summary(), "momentum": momentum_fit.summary()}


def cmd_ed(config: RunConfig, args: argparse.Namespace) -> int:
    """Diagonalize a sector and optionally match the configured Bethe state."""
    L = config.single_length()
    M = config.M if config.M is not None else L // 2
    spectrum = build_and_diagonalize(L, M, config.gamma, config.phi)
    document: Dict[str, Any] = {"spectrum": spectrum.model_dump(mode="json")}
    exit_code = EXIT_OK
    if args.match:
        numbers = config.numbers_for(L)
        if numbers.M != M:
            raise ConfigurationError(
                f"the configured state has M={numbers.M}, the sector M={M}",
                details={"state_M": numbers.M, "M": M},
            )
        state = solve(config.params_for(L, numbers), numbers, config.solver)
        report = match_bethe(spectrum, [observables(state).E_L], args.match_tol)
        document["match"] = report.model_dump(mode="json")
        if not report.all_matched:
            exit_code = EXIT_CHECK_FAILED
    _emit(document, config.output)
    return exit_code


def cmd_char(args: argparse.Namespace) -> int:
    """Emit a partial character table."""
    m = args.m
    if m is None:
        if args.n_plus is None or args.n_minus is None or args.gamma is None:
            raise ConfigurationError("give --m, or --n-plus, --n-minus and --gamma")
        config = load_config(args)
        m = movable_count(args.n_plus, args.n_minus, config.gamma)
    character = partial_character(m, args.kmax)
    if args.csv is not None:
        rows = [[str(k), str(c)] for k, c in enumerate(character.coefficients)]
        _write_table(args.csv, CHAR_CSV_COLUMNS, rows)
    _emit(character.model_dump(mode="json"), args.output)
    return EXIT_OK


def cmd_verify(config: RunConfig, args: argparse.Namespace) -> int:
    """Run the remainder and degeneracy checks; exit 1 on any breach."""
    L = config.L if config.L is not None else DEFAULT_VERIFY_L
    gamma = config.gamma
    checks: List[CheckResult] = []

    numbers = ground_state_numbers(L, L // 2)
    state = solve(config.params_for(L, numbers), numbers, config.solver)
    checks.append(_check_remainder(state, gamma, args.width))

    degeneracy = verify_degeneracy(L, 1, 1, gamma, DEGENERACY_K_MAX)
    checks.append(
        CheckResult(
            name="degeneracy",
            passed=degeneracy.ok,
            value=float(len(degeneracy.mismatches)),
            target=0.0,
            detail=f"m={degeneracy.m}, levels 0..{DEGENERACY_K_MAX}, n+=n-=1",
        )
    )

    if args.all:
        measured = positive_side_sum(state)
        exact = positive_side_sum_exact(classify(numbers, L), L)
        checks.append(
            CheckResult(
                name="positive_side_sum",
                passed=abs(measured - exact) <= SIDE_SUM_TOL,
                value=measured,
                target=exact,
                tolerance=SIDE_SUM_TOL,
            )
        )
        small = ground_state_numbers(ED_CHECK_L, ED_CHECK_L // 2)
        small_state = solve(config.params_for(ED_CHECK_L, small), small, config.solver)
        spectrum = build_and_diagonalize(ED_CHECK_L, small.M, gamma, config.phi)
        report = match_bethe(spectrum, [observables(small_state).E_L], DEFAULT_MATCH_TOL)
        checks.append(
            CheckResult(
                name="ed_ground_state",
                passed=report.all_matched and report.entries[0].index == 0,
                value=report.max_gap,
                target=0.0,
                tolerance=DEFAULT_MATCH_TOL,
                detail=f"L={ED_CHECK_L}",
            )
        )

    verdict = VerifyReport(checks=tuple(checks))
    for check in verdict.checks:
        logger.info(f"{check.name}: {'ok' if check.passed else 'FAILED'} {check.detail}")
    _emit(verdict.model_dump(mode="json"), config.output)
    return EXIT_OK if verdict.passed else EXIT_CHECK_FAILED


def _check_remainder(state: BetheState, gamma: float, width: float) -> CheckResult:
    n = double_zero_index(gamma)
    if n is not None:
        return CheckResult(
            name="w_L_gaussian",
            passed=True,
            detail=f"skipped: no remainder prediction at gamma = pi/{n}",
        )
    func, func_hat = gaussian(width)
    measured, predicted = w_L(state, func, func_hat)
    ratio = measured / predicted
    return CheckResult(
        name="w_L_gaussian",
        passed=abs(ratio - 1.0) <= WL_RATIO_TOL,
        value=ratio,
        target=1.0,
        tolerance=WL_RATIO_TOL,
        detail=f"L={state.L}, width={width}",
    )


def cmd_predict(config: RunConfig, args: argparse.Namespace) -> int:
    """Closed-form predictions for every configured chain length."""
    predictions = predict_scan(config)
    _emit({"predictions": [p.model_dump(mode="json") for p in predictions]}, config.output)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig, argparse.Namespace], int]] = {
    "solve": cmd_solve,
    "scan": cmd_scan,
    "ed": cmd_ed,
    "verify": cmd_verify,
    "predict": cmd_predict,
}


def _join_numbers(argv: Sequence[str]) -> List[str]:
    """Glue ``--numbers -3,-1`` into ``--numbers=-3,-1`` so argparse keeps the value."""
    joined: List[str] = []
    tokens = list(argv)
    i = 0
    while i < len(tokens):
        if tokens[i] == "--numbers" and i + 1 < len(tokens):
            joined.append(f"--numbers={tokens[i + 1]}")
            i += 2
            continue
        joined.append(tokens[i])
        i += 1
    return joined


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit code.

    Exit codes: 0 success, 1 failed check, 2 configuration or validation
    error, 3 solver or numerical error.
    """
    args = build_parser().parse_args(_join_numbers(sys.argv[1:] if argv is None else argv))
    try:
        if args.command == "char":
            setup_logging(LogLevel(args.log_level) if args.log_level else LogLevel.WARNING)
            return cmd_char(args)
        config = load_config(args)
        setup_logging(config.log_level, config.log_format)
        return COMMANDS[args.command](config, args)
    except (ConfigurationError, ValidationError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_CONFIG
    except XXZLabError as e:
        details = f" {json.dumps(e.details, default=str, sort_keys=True)}" if e.details else ""
        sys.stderr.write(f"error: {e}{details}\n")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    raise SystemExit(main())

"""Run configuration for xxzlab."""

import json
import math
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import tomli
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .constants import DEFAULT_LOG_FORMAT
from .exceptions import ConfigurationError
from .models import BetheNumberSet, ModelParams, SolverOptions, StateTemplate
from .states import template_numbers
from .types import LogLevel, StateKind
from .utils.validation import validate_model


def parse_gamma(value: Union[float, int, str]) -> float:
    """Parse an anisotropy given as a number or a multiple of pi.

    Strings like ``"0.55pi"``, ``"3/7pi"`` or ``"pi/5"`` are parsed exactly as a
    rational coefficient, then converted to radians once.

    Args:
        value: Angle in radians, or a string ending in ``pi``

    Returns:
        float: Angle in radians

    Raises:
        ConfigurationError: If the string cannot be parsed
    """
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if not isinstance(value, str):
        raise ConfigurationError(f"cannot parse gamma from {value!r}")
    text = value.strip().lower().replace(" ", "").replace("*", "")
    try:
        if text.startswith("pi/"):
            coefficient = 1 / Fraction(text[3:])
        elif text.endswith("pi"):
            head = text[:-2]
            coefficient = Fraction(head) if head else Fraction(1)
        else:
            return float(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigurationError(f"cannot parse gamma from {value!r}", cause=e) from e
    return math.pi * coefficient.numerator / coefficient.denominator


class RunConfig(BaseModel):
    """Configuration of a single command-line run."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    # Model
    gamma: float = Field(gt=0.0, lt=math.pi, description="Anisotropy in radians")
    phi: float = Field(default=0.0, description="Boundary twist")
    L: Optional[int] = Field(default=None, ge=2, description="Chain length of a single run")
    L_values: Tuple[int, ...] = Field(default=(), description="Chain lengths of a scan")
    M: Optional[int] = Field(default=None, ge=0, description="Sector for exact diagonalization")

    # State
    state: StateTemplate = Field(default_factory=StateTemplate, description="State recipe")

    # Solver
    solver: SolverOptions = Field(default_factory=SolverOptions)
    warm_start: bool = Field(default=True, description="Seed each scan solve from the previous L")
    workers: int = Field(default=1, ge=1, description="Parallel solves in cold scans")

    # Outputs
    output: Optional[Path] = Field(default=None, description="JSON output file, stdout if unset")
    csv: Optional[Path] = Field(default=None, description="CSV table output")
    plot_data: Optional[Path] = Field(default=None, description="Two-column L vs amplitude file")

    # Logging settings
    log_level: LogLevel = Field(default=LogLevel.WARNING, description="Log level")
    log_format: str = Field(default=DEFAULT_LOG_FORMAT, description="Log format string")

    @field_validator("gamma", mode="before")
    @classmethod
    def parse_gamma_field(cls, v: Any) -> float:
        """Accept multiples of pi written as strings."""
        try:
            return parse_gamma(v)
        except ConfigurationError as e:
            raise ValueError(str(e)) from e

    @field_validator("L_values")
    @classmethod
    def check_L_values(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        """Chain lengths are distinct; they are returned sorted."""
        if len(set(v)) != len(v):
            raise ValueError("L_values must be distinct")
        return tuple(sorted(v))

    @model_validator(mode="after")
    def check_single_L(self) -> "RunConfig":
        """A single chain length must be even."""
        if self.L is not None and self.L % 2:
            raise ValueError("L must be even")
        return self

    @classmethod
    def from_file(cls, path: Union[str, Path], **overrides: Any) -> "RunConfig":
        """Load a configuration from a JSON or TOML file, then apply overrides.

        Files ending in ``.toml`` are read as TOML, anything else as JSON.

        Args:
            path: Configuration file
            **overrides: Values replacing those of the file; None values are ignored,
                dicts are merged into the file's dicts one level deep

        Returns:
            RunConfig: Validated configuration

        Raises:
            ConfigurationError: If the file cannot be read or parsed
            ValidationError: If the values are invalid
        """
        data = _read_config_file(Path(path))
        for key, value in overrides.items():
            if value is None:
                continue
            if isinstance(value, dict) and isinstance(data.get(key), dict):
                data[key] = {**data[key], **value}
            else:
                data[key] = value
        return validate_model(cls, data)

    def lengths(self) -> Tuple[int, ...]:
        """Chain lengths to run: L_values, else the single L."""
        if self.L_values:
            return self.L_values
        if self.L is not None:
            return (self.L,)
        return ()

    def single_length(self) -> int:
        """The one chain length of a single-state command."""
        lengths = self.lengths()
        if len(lengths) != 1:
            raise ConfigurationError("exactly one chain length is required", details={"L": lengths})
        return lengths[0]

    def numbers_for(self, L: int) -> BetheNumberSet:
        """Bethe numbers of the configured state at chain length L."""
        return template_numbers(self.state, L, self.gamma)

    def params_for(self, L: int, numbers: BetheNumberSet) -> ModelParams:
        """Model parameters for the configured state at chain length L."""
        return validate_model(
            ModelParams, {"gamma": self.gamma, "phi": self.phi, "L": L, "M": numbers.M}
        )

    @property
    def canonical(self) -> bool:
        """Whether the state is built from a recipe rather than explicit numbers."""
        return self.state.kind != StateKind.NUMBERS


def _read_config_file(path: Path) -> Dict[str, Any]:
    try:
        if path.suffix.lower() == ".toml":
            with path.open("rb") as f:
                data: Any = tomli.load(f)
        else:
            data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError, tomli.TOMLDecodeError) as e:
        raise ConfigurationError(f"cannot read config file {path}: {e}", cause=e) from e
    if not isinstance(data, dict):
        raise ConfigurationError(f"config file {path} must contain a JSON object")
    return data

"""Common types for xxzlab."""

from enum import Enum


class LogLevel(str, Enum):
    """Log level type."""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class StateKind(str, Enum):
    """How the Bethe numbers of a run are specified."""

    GROUND = "ground"
    NUMBERS = "numbers"
    EXCITATION = "excitation"


class TwistConvention(str, Enum):
    """Phase attached to the boundary hopping term of the Hamiltonian."""

    HERMITIAN = "hermitian"

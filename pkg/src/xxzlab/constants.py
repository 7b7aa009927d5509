"""Common constants for xxzlab."""

from typing import Final, Tuple

# Model constants
ALPHA: Final[float] = 0.25  # lim z_inf(lambda) for lambda -> +inf

# Solver defaults
DEFAULT_TOL: Final[float] = 1e-13
DEFAULT_MAX_ITER: Final[int] = 200
DEFAULT_DAMPING: Final[float] = 1.0
DEFAULT_MAX_HALVINGS: Final[int] = 30
DEFAULT_SOLVE_RETRIES: Final[int] = 2
MAX_DENSE_ROOTS: Final[int] = 4096

# Exact diagonalization
ED_MAX_SITES: Final[int] = 16

# Quadrature
QUAD_EPSREL: Final[float] = 1e-12
QUAD_EPSABS: Final[float] = 1e-14
QUAD_LIMIT: Final[int] = 200

# Numerical guards
POLE_TOL: Final[float] = 1e-12
BOUND_SLACK: Final[float] = 1e-9
FOURIER_EXP_SWITCH: Final[float] = 30.0

# Cache
DEFAULT_CACHE_SIZE: Final[int] = 256

# Output
FLOAT_FORMAT: Final[str] = ".17g"
SCAN_CSV_COLUMNS: Final[Tuple[str, ...]] = ("L", "e_L", "e_pred", "a_L", "P_L", "P_pred")
CHAR_CSV_COLUMNS: Final[Tuple[str, ...]] = ("k", "p_m")

# Verification defaults
DEFAULT_GAUSSIAN_WIDTH: Final[float] = 0.5
DEFAULT_VERIFY_L: Final[int] = 1024
DEFAULT_MATCH_TOL: Final[float] = 1e-9

# Logging
DEFAULT_LOG_FORMAT: Final[str] = "<level>{level: <8}</level> {name}:{function} - {message}"

"""Exact diagonalization of the twisted XXZ chain in a magnetization sector.

H = -1/(2 sin gamma) sum_j [sx sx + sy sy + Delta (sz sz - 1)], Delta = -cos gamma,
with the boundary condition s+-_{L+1} = exp(-+2 i pi phi) s+-_1.

Basis states are bitmasks over the L sites; a set bit is a down spin.
"""

import math
from itertools import combinations
from typing import Dict, List, Sequence

import numpy as np
import numpy.typing as npt
import scipy.linalg
from loguru import logger

from .constants import DEFAULT_MATCH_TOL, ED_MAX_SITES
from .exceptions import DimensionError, ValidationError
from .models import MatchEntry, MatchReport, SectorSpectrum
from .types import TwistConvention
from .utils.validation import check_gamma

TWIST_NOTE = (
    "hermitian convention s+-_(L+1) = exp(-+2 i pi phi) s+-_1; the spectrum is invariant "
    "under phi -> -phi, so energies do not fix the sign of the twist"
)


def sector_basis(L: int, M: int) -> List[int]:
    """Bitmasks with exactly M set bits, ascending."""
    states = [sum(1 << site for site in sites) for sites in combinations(range(L), M)]
    states.sort()
    return states


def hamiltonian_sector(L: int, M: int, gamma: float, phi: float) -> npt.NDArray[np.generic]:
    """Dense Hamiltonian of the M-down-spin sector.

    Only the strictly lower triangle of the hopping part is assembled; the
    upper triangle is its conjugate transpose, so the matrix is Hermitian
    exactly. At integer twist the matrix is real.

    Args:
        L: Number of sites, 2 <= L <= 16
        M: Number of down spins, 0 <= M <= L
        gamma: Anisotropy in (0, pi)
        phi: Twist

    Returns:
        Matrix of shape (C(L, M), C(L, M))

    Raises:
        DimensionError: If L exceeds the dense cap
        ValidationError: If L or M is out of range
    """
    gamma = check_gamma(gamma)
    _check_sizes(L, M)

    # phi and phi + 1 give the same matrix bit for bit
    reduced = float(phi) % 1.0
    real = reduced == 0.0
    phase = 1.0 if real else complex(np.exp(2j * math.pi * reduced))
    dtype = np.float64 if real else np.complex128

    basis = sector_basis(L, M)
    index: Dict[int, int] = {state: i for i, state in enumerate(basis)}
    dim = len(basis)
    sin_g = math.sin(gamma)
    antiparallel = -math.cos(gamma) / sin_g
    hop = -1.0 / sin_g

    diagonal = np.zeros(dim, dtype=np.float64)
    lower = np.zeros((dim, dim), dtype=dtype)
    for i, state in enumerate(basis):
        for site in range(L):
            nxt = (site + 1) % L
            if ((state >> site) & 1) == ((state >> nxt) & 1):
                continue
            diagonal[i] += antiparallel
            j = index[state ^ ((1 << site) | (1 << nxt))]
            if j <= i:
                continue
            amplitude = hop
            if nxt == 0:
                # boundary bond: the down spin crosses from site L to site 1 or back
                amplitude = hop * (phase if (state >> site) & 1 else np.conj(phase))
            lower[j, i] += amplitude

    return lower + lower.conj().T + np.diag(diagonal).astype(dtype)


def build_and_diagonalize(L: int, M: int, gamma: float, phi: float) -> SectorSpectrum:
    """Spectrum of the M-down-spin sector.

    Args:
        L: Number of sites, 2 <= L <= 16
        M: Number of down spins, 0 <= M <= L
        gamma: Anisotropy in (0, pi)
        phi: Twist

    Returns:
        SectorSpectrum: Ascending eigenvalues

    Raises:
        DimensionError: If L exceeds the dense cap
    """
    H = hamiltonian_sector(L, M, gamma, phi)
    logger.debug(f"Diagonalizing L={L} M={M} sector of dimension {H.shape[0]}")
    eigenvalues = scipy.linalg.eigh(H, eigvals_only=True, check_finite=False)
    return SectorSpectrum(
        L=L,
        M=M,
        gamma=float(gamma),
        phi=float(phi),
        eigenvalues=tuple(float(v) for v in np.sort(eigenvalues)),
        dimension=H.shape[0],
    )


def one_magnon_energies(L: int, gamma: float, phi: float) -> List[float]:
    """Closed-form M = 1 spectrum, ascending.

    E_n = -(2 cos(2 pi (n + phi) / L) + 2 cos gamma) / sin gamma for n = 0..L-1.
    """
    gamma = check_gamma(gamma)
    _check_sizes(L, 1, cap=False)
    values = [
        -(2.0 * math.cos(2.0 * math.pi * (n + phi) / L) + 2.0 * math.cos(gamma)) / math.sin(gamma)
        for n in range(L)
    ]
    return sorted(values)


def match_bethe(
    spectrum: SectorSpectrum, bethe_energies: Sequence[float], tol: float = DEFAULT_MATCH_TOL
) -> MatchReport:
    """Pair each Bethe energy with the nearest exact eigenvalue.

    Args:
        spectrum: Exact sector spectrum
        bethe_energies: Total energies L e_L of Bethe states of the same sector
        tol: Largest gap counted as a match

    Returns:
        MatchReport: One entry per Bethe energy, in input order
    """
    levels = np.asarray(spectrum.eigenvalues, dtype=np.float64)
    entries = []
    for energy in bethe_energies:
        i = int(np.argmin(np.abs(levels - energy)))
        gap = abs(float(levels[i]) - float(energy))
        entries.append(
            MatchEntry(
                bethe_energy=float(energy),
                nearest=float(levels[i]),
                gap=gap,
                index=i,
                matched=gap <= tol,
            )
        )
    report = MatchReport(
        L=spectrum.L,
        M=spectrum.M,
        gamma=spectrum.gamma,
        phi=spectrum.phi,
        tol=tol,
        convention=TwistConvention.HERMITIAN,
        entries=tuple(entries),
        note=TWIST_NOTE,
    )
    for entry in report.unmatched:
        logger.warning(f"Bethe energy {entry.bethe_energy:.17g} unmatched (gap {entry.gap:.2e})")
    return report


def _check_sizes(L: int, M: int, cap: bool = True) -> None:
    if L < 2:
        raise ValidationError(f"L must be at least 2, got {L}", details={"L": L})
    if cap and L > ED_MAX_SITES:
        raise DimensionError(
            f"L={L} exceeds the dense diagonalization limit of {ED_MAX_SITES} sites",
            details={"L": L, "limit": ED_MAX_SITES},
        )
    if not 0 <= M <= L:
        raise ValidationError(f"M must satisfy 0 <= M <= L, got M={M}", details={"L": L, "M": M})

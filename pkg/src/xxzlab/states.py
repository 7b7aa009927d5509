"""Bethe number configurations: ground state, excitations and classification.

Bethe numbers are half-integers and are handled exclusively through their
doubled odd-integer representation, so every combinatorial quantity here is
exact.
"""

import math
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from loguru import logger

from .constants import BOUND_SLACK
from .exceptions import ValidationError
from .models import BetheNumberSet, StateClassification, StateTemplate
from .types import StateKind
from .utils.validation import check_gamma


def effective_twist(phi: float, numbers: BetheNumberSet) -> float:
    """Twist entering the counting function.

    For odd M the Bethe numbers are half-integers only at twist phi + 1/2 or
    phi - 1/2, which give the same Hamiltonian. The sign is that of
    card{I > 0} - card{I < 0}, so a packed configuration is centred on the
    twist whichever side holds the extra number: {-5/2, ..., 7/2} takes
    phi + 1/2 and its mirror {-7/2, ..., 5/2} takes phi - 1/2.

    Args:
        phi: Twist of the Hamiltonian
        numbers: Bethe numbers

    Returns:
        float: phi for even M, phi +- 1/2 for odd M
    """
    if numbers.M % 2 == 0:
        return phi
    excess = len(numbers.positive) - len(numbers.negative)
    return phi + 0.5 if excess > 0 else phi - 0.5


def ground_state_numbers(L: int, M: int) -> BetheNumberSet:
    """Packed configuration of M half-integers centred on zero.

    For odd M no symmetric packing exists and the extra number goes to the
    positive side, e.g. M = 1 gives {1/2}.

    Args:
        L: Chain length, even
        M: Number of roots, 1 <= M <= L/2

    Returns:
        BetheNumberSet: Packed configuration

    Raises:
        ValidationError: If M is out of range
    """
    _check_sector(L, M)
    shift = M % 2
    return BetheNumberSet(doubled=tuple(2 * k - M - 1 + shift for k in range(1, M + 1)))


def classify(numbers: BetheNumberSet, L: int) -> StateClassification:
    """Vacancy counts and descendant levels of a configuration.

    n+- = L/4 - card{+-I > 0}; Delta+ I is the sum of the positive numbers
    minus the sum for the packed configuration with as many positive numbers,
    Delta- I likewise for the negative side.

    Args:
        numbers: Bethe numbers
        L: Chain length, even

    Returns:
        StateClassification: n_plus, n_minus, delta_plus_I, delta_minus_I
    """
    if L % 2:
        raise ValidationError("L must be even", details={"L": L})
    quarter = Fraction(L, 4)
    positive = numbers.positive
    negative = numbers.negative
    # the first p odd numbers add up to p^2
    delta_plus = (sum(positive) - len(positive) ** 2) // 2
    delta_minus = (sum(-d for d in negative) - len(negative) ** 2) // 2
    return StateClassification(
        n_plus=float(quarter - len(positive)),
        n_minus=float(quarter - len(negative)),
        delta_plus_I=delta_plus,
        delta_minus_I=delta_minus,
    )


def descendant_bound(L: int, n_plus: float, n_minus: float, gamma: float) -> float:
    """Largest admissible |I|: L/4 + (n+ + n-)(1/2 - gamma/pi), at zero twist."""
    gamma = check_gamma(gamma)
    return L / 4.0 + (n_plus + n_minus) * (0.5 - gamma / math.pi)


def admissible(numbers: BetheNumberSet, L: int, gamma: float) -> bool:
    """Whether every |I_k| respects the descendant bound.

    The bound is the zero-twist one; the twist is ignored.

    Args:
        numbers: Bethe numbers
        L: Chain length, even
        gamma: Anisotropy in (0, pi)

    Returns:
        bool: True if all numbers are within the bound
    """
    cls = classify(numbers, L)
    bound = descendant_bound(L, cls.n_plus, cls.n_minus, gamma)
    return all(abs(d) / 2.0 <= bound + BOUND_SLACK for d in numbers.doubled)


def positive_slots(L: int, n_plus: float, n_minus: float, gamma: float) -> int:
    """Number of admissible positive half-integers 1/2, 3/2, ... under the bound."""
    bound = descendant_bound(L, n_plus, n_minus, gamma)
    return max(0, math.floor(bound + 0.5 + BOUND_SLACK))


def partitions(
    n: int, max_part: Optional[int] = None, max_parts: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """Partitions of n as non-increasing tuples, largest parts first.

    Args:
        n: Integer to partition, >= 0
        max_part: Largest allowed part, unrestricted if None
        max_parts: Largest allowed number of parts, unrestricted if None

    Yields:
        Tuple[int, ...]: One partition at a time
    """
    if n < 0:
        return
    top = n if max_part is None else max_part
    count = n if max_parts is None else max_parts
    yield from _bounded_partitions(n, top, count)


def _bounded_partitions(n: int, max_part: int, max_parts: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_part <= 0 or max_parts <= 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _bounded_partitions(n - first, first, max_parts - 1):
            yield (first,) + rest


def enumerate_excitations(
    L: int, M: int, level: int, gamma: float, n_plus: Optional[float] = None
) -> List[BetheNumberSet]:
    """All admissible configurations with the negative side packed and Delta+ I = level.

    Configurations correspond one to one with partitions of ``level`` whose
    parts do not exceed the number of free admissible positive slots: the
    part at rank j moves the j-th largest positive number outward.

    Args:
        L: Chain length, even
        M: Number of roots
        level: Descendant level, >= 0
        gamma: Anisotropy in (0, pi)
        n_plus: Positive-side vacancies; defaults to the ground-state split

    Returns:
        List[BetheNumberSet]: Configurations, in partition order
    """
    if level < 0:
        raise ValidationError("level must be non-negative", details={"level": level})
    _check_sector(L, M)
    p = _positive_count(L, M, n_plus)
    q = M - p
    quarter = Fraction(L, 4)
    slots = positive_slots(L, float(quarter - p), float(quarter - q), gamma)
    max_part = slots - p
    if max_part < 0:
        logger.debug(f"Packed positive side already violates the bound (L={L}, M={M})")
        return []

    negative = tuple(-(2 * j + 1) for j in reversed(range(q)))
    configurations = []
    for parts in partitions(level, max_part, p):
        padded = parts + (0,) * (p - len(parts))
        positive = sorted(2 * (p - 1 - j) + 1 + 2 * padded[j] for j in range(p))
        numbers = BetheNumberSet(doubled=negative + tuple(positive))
        if admissible(numbers, L, gamma):
            configurations.append(numbers)
    return configurations


def excitation_numbers(
    L: int,
    n_plus: float,
    n_minus: float,
    delta_plus: int = 0,
    delta_minus: int = 0,
    gamma: Optional[float] = None,
) -> BetheNumberSet:
    """Canonical configuration of an excitation template.

    Each side holds L/4 - n+- numbers. A displacement Delta is realised by
    moving the outermost numbers outward, whole displacement on the outermost
    number when gamma is None, otherwise greedily in parts no larger than the
    movable-vacancy count of that side.

    Args:
        L: Chain length, even
        n_plus: Vacancies on the positive side
        n_minus: Vacancies on the negative side
        delta_plus: Displacement on the positive side
        delta_minus: Displacement on the negative side
        gamma: Anisotropy bounding the parts, optional

    Returns:
        BetheNumberSet: Configuration

    Raises:
        ValidationError: If the template cannot be realised
    """
    if L % 2:
        raise ValidationError("L must be even", details={"L": L})
    quarter = Fraction(L, 4)
    p_frac = quarter - Fraction(n_plus)
    q_frac = quarter - Fraction(n_minus)
    if p_frac.denominator != 1 or q_frac.denominator != 1 or p_frac < 0 or q_frac < 0:
        raise ValidationError(
            f"L={L} cannot hold n_plus={n_plus}, n_minus={n_minus}: "
            "L/4 - n must be a non-negative integer on each side",
            details={"L": L, "n_plus": n_plus, "n_minus": n_minus},
        )
    p, q = int(p_frac), int(q_frac)
    if p + q == 0:
        raise ValidationError("template has no Bethe numbers", details={"L": L})

    plus_cap: Optional[int] = None
    minus_cap: Optional[int] = None
    if gamma is not None:
        plus_cap = positive_slots(L, n_plus, n_minus, gamma) - p
        minus_cap = positive_slots(L, n_minus, n_plus, gamma) - q

    positive = _displaced_side(p, delta_plus, plus_cap, "positive")
    negative = _displaced_side(q, delta_minus, minus_cap, "negative")
    return BetheNumberSet(doubled=tuple(sorted([-d for d in negative] + positive)))


def template_numbers(
    template: StateTemplate, L: int, gamma: Optional[float] = None
) -> BetheNumberSet:
    """Bethe numbers a template prescribes at chain length L.

    Args:
        template: State recipe
        L: Chain length
        gamma: Anisotropy, bounds excitation parts when given

    Returns:
        BetheNumberSet: Configuration for this L
    """
    if template.kind == StateKind.GROUND:
        return ground_state_numbers(L, L // 2)
    if template.kind == StateKind.NUMBERS:
        assert template.numbers is not None
        return BetheNumberSet(doubled=template.numbers)
    assert template.n_plus is not None and template.n_minus is not None
    return excitation_numbers(
        L,
        template.n_plus,
        template.n_minus,
        template.delta_plus,
        template.delta_minus,
        gamma,
    )


def _displaced_side(count: int, delta: int, cap: Optional[int], side: str) -> List[int]:
    """Doubled magnitudes of one side after a displacement delta."""
    if delta < 0:
        raise ValidationError(f"{side} displacement must be non-negative")
    parts: List[int] = []
    remaining = delta
    if cap is None:
        if remaining:
            parts.append(remaining)
    else:
        if remaining and cap <= 0:
            raise ValidationError(f"no movable vacancy on the {side} side for a descendant")
        while remaining:
            part = min(remaining, cap)
            parts.append(part)
            remaining -= part
    if len(parts) > count:
        raise ValidationError(
            f"displacement {delta} needs {len(parts)} {side} numbers, only {count} available"
        )
    padded = parts + [0] * (count - len(parts))
    return [2 * (count - 1 - j) + 1 + 2 * padded[j] for j in range(count)]


def _positive_count(L: int, M: int, n_plus: Optional[float]) -> int:
    if n_plus is None:
        return (M + 1) // 2
    p = Fraction(L, 4) - Fraction(n_plus)
    if p.denominator != 1 or not 0 <= p <= M:
        raise ValidationError(
            f"n_plus={n_plus} is incompatible with L={L}, M={M}",
            details={"L": L, "M": M, "n_plus": n_plus},
        )
    return int(p)


def _check_sector(L: int, M: int) -> None:
    if L % 2:
        raise ValidationError("L must be even", details={"L": L})
    if M < 1 or 2 * M > L:
        raise ValidationError(f"M must satisfy 1 <= M <= L/2, got M={M}", details={"L": L, "M": M})

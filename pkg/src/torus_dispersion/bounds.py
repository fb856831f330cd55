"""Closed-form dispersion and discrepancy bounds for cross-checks and reports."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvalidInputError

#: Hinrichs' constant 1/(32 e^2); lower bounds for anchored-box discrepancy
#: hold for eps below it.
HINRICHS_C = 1.0 / (32.0 * math.e ** 2)

#: Upper bounds quoted for context only; their constants are not explicit.
UPPER_BOUND_CITATIONS = (
    "disp(P, boxes) <= C^d / n for some C < inf (Larcher)",
    "N(eps, boxes) <= C d eps^-2 (Heinrich, Novak, Wasilkowski, Wozniakowski)",
)


def theorem1_bound(n: int, d: int, exact: bool = False):
    """``min(1, d/n)``: every n-point set leaves a periodic box this large empty.

    Returns a ``Fraction`` when ``exact`` is set.
    """
    if d < 1:
        raise InvalidInputError(f"d must be >= 1, got {d}")
    if n < 0:
        raise InvalidInputError(f"n must be >= 0, got {n}")
    if n <= d:
        return Fraction(1) if exact else 1.0
    return Fraction(d, n) if exact else d / n


def inverse_N0_lower(eps: float, d: int) -> float:
    """Minimal point count for periodic dispersion (and discrepancy) <= eps is >= d/eps."""
    if not 0 < eps < 1:
        raise InvalidInputError(f"eps must lie in (0, 1), got {eps}")
    if d < 1:
        raise InvalidInputError(f"d must be >= 1, got {d}")
    return d / eps


def ahr_lower_bound(n: int, d: int) -> float:
    """Aistleitner-Hinrichs-Rudolf: disp(P, boxes) >= log2(d) / (4 (n + log2(d)))."""
    if d < 2:
        raise InvalidInputError(f"bound degenerates for d < 2, got d={d}")
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    ld = math.log2(d)
    return ld / (4 * (n + ld))


def hinrichs_N_lower(eps: float, d: int) -> float:
    """``c d / eps`` with ``c = 1/(32 e^2)``, valid for ``0 < eps < c``."""
    if not 0 < eps < HINRICHS_C:
        raise InvalidInputError(
            f"eps must lie in (0, 1/(32 e^2)) = (0, {HINRICHS_C:.6g}), got {eps}")
    if d < 1:
        raise InvalidInputError(f"d must be >= 1, got {d}")
    return HINRICHS_C * d / eps


def split_cube_bound(n: int) -> float:
    """Cutting the cube into n+1 slabs leaves one empty: volume 1/(n+1)."""
    if n < 0:
        raise InvalidInputError(f"n must be >= 0, got {n}")
    return 1.0 / (n + 1)


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    theorem1: float
    split_cube: float
    ahr_lower: Optional[float]
    eps: Optional[float]
    hinrichs_n_lower: Optional[float]
    n0_lower: Optional[float]

    def to_dict(self) -> dict:
        return asdict(self)


def bound_report(n: int, d: int, eps: Optional[float] = None) -> BoundReport:
    """All bounds for ``(n, d)``; entries outside their domain are ``None``."""
    ahr = ahr_lower_bound(n, d) if d >= 2 and n >= 1 else None
    n0 = inverse_N0_lower(eps, d) if eps is not None and 0 < eps < 1 else None
    hin = hinrichs_N_lower(eps, d) if eps is not None and 0 < eps < HINRICHS_C else None
    return BoundReport(n, d, theorem1_bound(n, d), split_cube_bound(n), ahr, eps, hin, n0)

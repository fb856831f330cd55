"""Reproducible point sets for tests and experiments.

Random sets come from ``random.Random(seed).random()`` (Mersenne Twister,
53-bit floats). Python guarantees that this stream is the same on every
platform and version for a given integer seed, so frozen test values stay
valid. Draws fill the set axis by axis, so the first ``k`` coordinates of a
d-dimensional set equal the k-dimensional set with the same seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .core import PointSet, canonicalize
from .errors import BudgetExceededError, InvalidInputError

KINDS = ("random", "grid", "kronecker", "fibonacci", "equispaced-1d")
GRID_BUDGET = 10**6


def _check_n(n: int, minimum: int = 0):
    if n < minimum:
        raise InvalidInputError(f"n must be >= {minimum}, got {n}")


def _rational(i: int, m: int, exact: bool):
    return Fraction(i, m) if exact else i / m


def gen_random(n: int, d: int, seed: int, exact: bool = False) -> PointSet:
    """``n`` i.i.d. uniform points in [0, 1)^d."""
    _check_n(n)
    rng = random.Random(seed)
    columns = [[rng.random() for _ in range(n)] for _ in range(d)]
    return canonicalize(zip(*columns) if n else [], dim=d, exact=exact)


def gen_grid(m: int, d: int, exact: bool = False, budget: int = GRID_BUDGET) -> PointSet:
    """The lattice ``{0, 1/m, ..., (m-1)/m}^d`` in lexicographic order."""
    if m < 1:
        raise InvalidInputError(f"m must be >= 1, got {m}")
    if m**d > budget:
        raise BudgetExceededError(m**d, budget)
    ticks = [_rational(i, m, exact) for i in range(m)]
    rows = [[]]
    for _ in range(d):
        rows = [r + [t] for r in rows for t in ticks]
    return canonicalize(rows, dim=d, exact=exact)


def _primes(count: int) -> list[int]:
    out: list[int] = []
    k = 2
    while len(out) < count:
        if all(k % p for p in out if p * p <= k):
            out.append(k)
        k += 1
    return out


def default_alpha(d: int) -> list[float]:
    """Fractional parts of sqrt(2), sqrt(3), sqrt(5), ... (first ``d`` primes)."""
    return [math.sqrt(p) % 1 for p in _primes(d)]


def gen_kronecker(n: int, d: int, alpha: Optional[Sequence[float]] = None,
                  exact: bool = False) -> PointSet:
    """Points ``i * alpha mod 1`` for ``i = 0 .. n-1``.

    In exact mode ``alpha`` is taken at its exact binary value.
    """
    _check_n(n, 1)
    alpha = list(default_alpha(d) if alpha is None else alpha)
    if len(alpha) != d:
        raise InvalidInputError(f"alpha has {len(alpha)} entries, expected {d}")
    if exact:
        alpha = [Fraction(a) for a in alpha]
    rows = [[(i * a) % 1 for a in alpha] for i in range(n)]
    return canonicalize(rows, dim=d, exact=exact)


def _fibonacci_pair(n: int) -> Optional[int]:
    """``F_{k-1}`` when ``n = F_k``, else ``None``."""
    a, b = 1, 1
    while b < n:
        a, b = b, a + b
    return a if b == n else None


def gen_fibonacci(n: int, exact: bool = False) -> PointSet:
    """Two-dimensional Fibonacci lattice ``(i/n, {i F_{k-1} / n})``.

    For ``n`` that is not a Fibonacci number the second coordinate falls back
    to ``{i (sqrt(5) - 1) / 2}``.
    """
    _check_n(n, 1)
    g = _fibonacci_pair(n)
    rows = []
    for i in range(n):
        if g is not None:
            second = _rational(i * g % n, n, exact)
        else:
            second = (i * (math.sqrt(5) - 1) / 2) % 1
        rows.append([_rational(i, n, exact), second])
    return canonicalize(rows, dim=2, exact=exact)


def gen_equispaced_1d(n: int, exact: bool = False) -> PointSet:
    """``{i/n : 0 <= i < n}`` on the circle."""
    _check_n(n, 1)
    return canonicalize([[_rational(i, n, exact)] for i in range(n)], dim=1, exact=exact)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: Optional[int] = None
    m: Optional[int] = None
    d: int = 1
    seed: int = 0
    alpha: Optional[tuple[float, ...]] = field(default=None)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInputError(f"unknown generator kind {self.kind!r}")
        if self.kind == "grid":
            if self.m is None:
                raise InvalidInputError("grid generator needs m")
        elif self.n is None:
            raise InvalidInputError(f"{self.kind} generator needs n")
        if self.d < 1:
            raise InvalidInputError(f"d must be >= 1, got {self.d}")
        if self.kind == "fibonacci" and self.d != 2:
            raise InvalidInputError("fibonacci lattice is two-dimensional")
        if self.kind == "equispaced-1d" and self.d != 1:
            raise InvalidInputError("equispaced-1d generator is one-dimensional")

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "d": self.d}
        if self.n is not None:
            out["n"] = self.n
        if self.m is not None:
            out["m"] = self.m
        if self.kind == "random":
            out["seed"] = self.seed
        if self.alpha is not None:
            out["alpha"] = list(self.alpha)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> GeneratorSpec:
        unknown = set(data) - {"kind", "n", "m", "d", "seed", "alpha"}
        if unknown:
            raise InvalidInputError(f"unknown generator fields {sorted(unknown)}")
        if "kind" not in data:
            raise InvalidInputError("generator spec needs a kind")
        alpha = data.get("alpha")
        kind = data["kind"]
        d = data.get("d", 2 if kind == "fibonacci" else 1)
        return cls(kind, data.get("n"), data.get("m"), d, data.get("seed", 0),
                   None if alpha is None else tuple(alpha))


def generate(spec: GeneratorSpec, exact: bool = False) -> PointSet:
    if spec.kind == "random":
        return gen_random(spec.n, spec.d, spec.seed, exact)
    if spec.kind == "grid":
        return gen_grid(spec.m, spec.d, exact)
    if spec.kind == "kronecker":
        return gen_kronecker(spec.n, spec.d, spec.alpha, exact)
    if spec.kind == "fibonacci":
        return gen_fibonacci(spec.n, exact)
    return gen_equispaced_1d(spec.n, exact)

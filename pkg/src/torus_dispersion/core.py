"""Geometry on the unit torus: point sets, periodic and anchored boxes.

Coordinates are either all ``float`` (binary64) or all ``Fraction`` (exact
rational mode). Nothing here uses a comparison tolerance: every predicate is
decided exactly on the stored values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatchError, InvalidInputError

Real = Union[float, Fraction]


def _frac(value: Real) -> Real:
    """Fractional part in [0, 1); the value 1 (possibly from rounding) maps to 0."""
    r = value % 1
    if r >= 1:
        r = r - r
    if isinstance(r, float):
        r += 0.0  # normalise -0.0
    return r


def _to_real(value, exact: bool) -> Real:
    try:
        if exact:
            if isinstance(value, float) and not math.isfinite(value):
                raise ValueError(value)
            return Fraction(value.strip() if isinstance(value, str) else value)
        x = float(value)
    except (TypeError, ValueError, ZeroDivisionError, OverflowError) as exc:
        raise InvalidInputError(f"invalid coordinate {value!r}") from exc
    if not math.isfinite(x):
        raise InvalidInputError(f"non-finite coordinate {value!r}")
    return x


def is_exact(value: Real) -> bool:
    return isinstance(value, Fraction)


@dataclass(frozen=True)
class PointSet:
    """A finite multiset of points on the d-dimensional torus.

    Build instances with :func:`canonicalize`; the constructor only checks
    the invariants.
    """

    dim: int
    points: tuple[tuple[Real, ...], ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidInputError(f"dimension must be >= 1, got {self.dim}")
        for p in self.points:
            if len(p) != self.dim:
                raise DimensionMismatchError(
                    f"point {p!r} has dimension {len(p)}, expected {self.dim}")
            for c in p:
                if not 0 <= c < 1:
                    raise InvalidInputError(f"coordinate {c!r} not in [0, 1)")

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def exact(self) -> bool:
        return any(is_exact(c) for p in self.points for c in p)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def column(self, axis: int) -> list[Real]:
        """Coordinates along ``axis`` (0-based)."""
        return [p[axis] for p in self.points]

    def translate(self, v: Sequence[Real]) -> PointSet:
        if len(v) != self.dim:
            raise DimensionMismatchError("translation vector has wrong dimension")
        return PointSet(self.dim, tuple(
            tuple(_frac(c + s) for c, s in zip(p, v)) for p in self.points))

    def permute(self, perm: Sequence[int]) -> PointSet:
        """New point set whose axis ``i`` is this set's axis ``perm[i]``."""
        if sorted(perm) != list(range(self.dim)):
            raise InvalidInputError(f"{perm!r} is not a permutation of the axes")
        return PointSet(self.dim, tuple(
            tuple(p[a] for a in perm) for p in self.points))


def canonicalize(raw: Iterable[Sequence], dim: int | None = None,
                 exact: bool = False) -> PointSet:
    """Map raw coordinate vectors onto the torus [0, 1)^d.

    Each coordinate is replaced by its fractional part, so 1 and 0 coincide
    and negative values wrap around. With ``exact=True`` values become
    ``Fraction`` (strings such as ``"0.1"`` or ``"1/3"`` are parsed exactly).
    """
    rows = [list(r) for r in raw]
    if not rows:
        if dim is None:
            raise InvalidInputError("empty point set needs an explicit dimension")
        return PointSet(dim, ())
    d = len(rows[0]) if dim is None else dim
    points = []
    for i, r in enumerate(rows):
        if len(r) != d:
            raise DimensionMismatchError(
                f"row {i} has {len(r)} coordinates, expected {d}")
        points.append(tuple(_frac(_to_real(c, exact)) for c in r))
    return PointSet(d, tuple(points))


@dataclass(frozen=True)
class PeriodicInterval:
    """Open arc ``(anchor, anchor + length) mod 1`` on the circle.

    ``length == 1`` is the whole circle minus the anchor. ``end`` records the
    far endpoint when the arc was built from two known coordinates; membership
    is then decided by comparisons alone, with no rounded arithmetic.
    """

    anchor: Real
    length: Real
    end: Real | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not 0 <= self.anchor < 1:
            raise InvalidInputError(f"anchor {self.anchor!r} not in [0, 1)")
        if not 0 < self.length <= 1:
            raise InvalidInputError(f"length {self.length!r} not in (0, 1]")

    @classmethod
    def between(cls, start: Real, stop: Real) -> PeriodicInterval:
        """The arc running counter-clockwise from ``start`` to ``stop``.

        Equal endpoints give the full circle minus that point.
        """
        return cls(start, arc_length(start, stop), stop)

    def contains(self, z: Real) -> bool:
        return interval_contains(self, z)

    def translate(self, s: Real) -> PeriodicInterval:
        end = None if self.end is None else _frac(self.end + s)
        return PeriodicInterval(_frac(self.anchor + s), self.length, end)


def arc_length(start: Real, stop: Real) -> Real:
    """Length of the arc from ``start`` to ``stop``; 1 when they coincide."""
    if start == stop:
        return start - start + 1
    return _frac(stop - start)


def interval_contains(interval: PeriodicInterval, z: Real) -> bool:
    """Whether ``(z - anchor) mod 1`` lies strictly inside ``(0, length)``."""
    a = interval.anchor
    if z == a:
        return False
    if interval.end is not None:
        e = interval.end
        if a < e:
            return a < z < e
        return z > a or z < e
    if interval.length == 1:
        return True
    # evaluated on the exact binary values so no rounding enters
    offset = (Fraction(z) - Fraction(a)) % 1
    return 0 < offset < Fraction(interval.length)


@dataclass(frozen=True)
class PeriodicBox:
    """Product of periodic intervals: one range of the torus family."""

    intervals: tuple[PeriodicInterval, ...]

    def __post_init__(self):
        if not self.intervals:
            raise InvalidInputError("a box needs at least one interval")

    @classmethod
    def from_arrays(cls, anchors: Sequence[Real], lengths: Sequence[Real]) -> PeriodicBox:
        if len(anchors) != len(lengths):
            raise DimensionMismatchError("anchors and lengths differ in length")
        return cls(tuple(PeriodicInterval(a, l) for a, l in zip(anchors, lengths)))

    @classmethod
    def full(cls, anchors: Sequence[Real]) -> PeriodicBox:
        """All lengths 1: the torus minus the hyperplanes through ``anchors``."""
        return cls(tuple(PeriodicInterval.between(a, a) for a in anchors))

    @property
    def dim(self) -> int:
        return len(self.intervals)

    @property
    def anchors(self) -> tuple[Real, ...]:
        return tuple(i.anchor for i in self.intervals)

    @property
    def lengths(self) -> tuple[Real, ...]:
        return tuple(i.length for i in self.intervals)

    @property
    def volume(self) -> Real:
        return box_volume(self)

    def contains(self, p: Sequence[Real]) -> bool:
        return box_contains(self, p)

    def translate(self, v: Sequence[Real]) -> PeriodicBox:
        if len(v) != self.dim:
            raise DimensionMismatchError("translation vector has wrong dimension")
        return PeriodicBox(tuple(i.translate(s) for i, s in zip(self.intervals, v)))

    def project(self, k: int) -> PeriodicBox:
        """Keep the first ``k`` intervals."""
        if not 1 <= k <= self.dim:
            raise InvalidInputError(f"k={k} out of range 1..{self.dim}")
        return PeriodicBox(self.intervals[:k])


@dataclass(frozen=True)
class AnchoredBox:
    """Ordinary open axis-parallel box ``(lower, upper)`` inside [0, 1]^d."""

    lower: tuple[Real, ...]
    upper: tuple[Real, ...]

    def __post_init__(self):
        if len(self.lower) != len(self.upper) or not self.lower:
            raise DimensionMismatchError("lower and upper corners differ in dimension")
        for lo, hi in zip(self.lower, self.upper):
            if not 0 <= lo < hi <= 1:
                raise InvalidInputError(f"invalid side ({lo!r}, {hi!r})")

    @property
    def dim(self) -> int:
        return len(self.lower)

    @property
    def anchors(self) -> tuple[Real, ...]:
        return self.lower

    @property
    def lengths(self) -> tuple[Real, ...]:
        return tuple(hi - lo for lo, hi in zip(self.lower, self.upper))

    @property
    def volume(self) -> Real:
        return box_volume(self)

    def contains(self, p: Sequence[Real]) -> bool:
        return box_contains(self, p)


Box = Union[PeriodicBox, AnchoredBox]


def box_contains(box: Box, p: Sequence[Real]) -> bool:
    """Coordinate-wise open membership of ``p`` in ``box``."""
    if len(p) != box.dim:
        raise DimensionMismatchError(
            f"point has dimension {len(p)}, box has dimension {box.dim}")
    if isinstance(box, AnchoredBox):
        return all(lo < c < hi for lo, c, hi in zip(box.lower, p, box.upper))
    return all(interval_contains(i, c) for i, c in zip(box.intervals, p))


def box_volume(box: Box) -> Real:
    """Lebesgue measure: product of side lengths."""
    return math.prod(box.lengths)


def is_empty(box: Box, points: PointSet | Iterable[Sequence[Real]]) -> bool:
    """True when no point lies inside ``box``."""
    return not any(box_contains(box, p) for p in points)


def project(points: PointSet, k: int) -> PointSet:
    """Drop the last ``d - k`` coordinates of every point (multiset kept)."""
    if not 1 <= k <= points.dim:
        raise InvalidInputError(f"k={k} out of range 1..{points.dim}")
    return PointSet(k, tuple(p[:k] for p in points.points))


def to_periodic(box: AnchoredBox) -> PeriodicBox:
    """View an anchored box as a periodic one with the same sides.

    The full side (0, 1) becomes the circle minus 0, which differs from the
    open unit interval only at the excluded point.
    """
    return PeriodicBox(tuple(
        PeriodicInterval(lo, hi - lo, _frac(hi))
        for lo, hi in zip(box.lower, box.upper)))

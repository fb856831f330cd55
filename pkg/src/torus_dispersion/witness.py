"""Constructive lower bound: an empty periodic box of volume >= min(1, d/n).

Two cases.

``n <= d``: anchor the i-th length-1 side at the i-th coordinate of the i-th
point (the remaining sides reuse the last point). Point i then lies on the
excluded hyperplane of axis i, and the box has volume 1.

``n > d``: on the first axis, look at the ``n`` arcs that start at a sorted
value and end ``d`` positions later. Each gap between neighbours is covered
by exactly ``d`` of them, so their lengths sum to ``d`` and the longest is at
least ``d/n``. At most ``d - 1`` points lie strictly inside it. The box is
grown one axis at a time with :func:`lift_box`: each new axis gets a length-1
side anchored at one inside point's coordinate, which keeps the volume and
shuts that point out.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .core import (
    PeriodicBox,
    PeriodicInterval,
    PointSet,
    Real,
    box_volume,
    interval_contains,
    is_empty,
)
from .errors import DimensionMismatchError, InvariantViolationError, WrongCaseError


class WitnessCase(str, Enum):
    FULL_VOLUME = "full-volume"
    WINDOW_LIFT = "window-lift"


@dataclass(frozen=True)
class WitnessResult:
    box: PeriodicBox
    volume: Real
    case: WitnessCase
    excluded_points: tuple[int, ...]
    window_axis: int  # 0-based; 0 unless best_axis picked another


def _zero(points: PointSet) -> Real:
    return Fraction(0) if points.exact else 0.0


def witness_full_volume(points: PointSet) -> WitnessResult:
    """Volume-1 box avoiding every point when ``n <= d``."""
    n, d = points.n, points.dim
    if n > d:
        raise WrongCaseError(f"full-volume witness needs n <= d, got n={n}, d={d}")
    if n == 0:
        box = PeriodicBox.full((_zero(points),) * d)
        return WitnessResult(box, box_volume(box), WitnessCase.FULL_VOLUME, (), 0)
    pts = points.points
    anchors = [pts[i][i] for i in range(n)] + [pts[n - 1][i] for i in range(n, d)]
    box = PeriodicBox.full(anchors)
    _check(box, points)
    return WitnessResult(box, box_volume(box), WitnessCase.FULL_VOLUME,
                         tuple(range(n)), 0)


def _sorted_order(values: Sequence[Real]) -> list[int]:
    return sorted(range(len(values)), key=lambda i: values[i])


def window_lengths(values: Sequence[Real], d: int) -> list[Real]:
    """Lengths of the ``n`` arcs spanning ``d`` consecutive gaps, in sorted order.

    The arc starting at sorted position ``i`` ends at position ``i + d``
    (cyclically). Equal values give length 0 without wrap-around and 1 with it.
    """
    n = len(values)
    if not 1 <= d < n:
        raise WrongCaseError(f"windows need n > d >= 1, got n={n}, d={d}")
    order = _sorted_order(values)
    out = []
    for i in range(n):
        lo, hi = values[order[i]], values[order[(i + d) % n]]
        out.append(hi - lo if i + d < n else hi - lo + 1)
    return out


def max_window(values: Sequence[Real], d: int) -> tuple[PeriodicInterval, list[int]]:
    """Longest arc over ``d`` consecutive gaps, and the indices of values inside it.

    Ties go to the first window in sorted order, i.e. the smallest anchor.
    The inside list holds at most ``d - 1`` indices, ordered around the arc.
    """
    lengths = window_lengths(values, d)
    n = len(values)
    order = _sorted_order(values)
    i = max(range(n), key=lambda k: (lengths[k], -k))
    window = PeriodicInterval(values[order[i]], lengths[i], values[order[(i + d) % n]])
    inside = [order[(i + k) % n] for k in range(1, d)
              if interval_contains(window, values[order[(i + k) % n]])]
    return window, inside


def lift_box(box: PeriodicBox, t: Sequence[Real]) -> PeriodicBox:
    """Append a full side anchored at the last coordinate of ``t``.

    The result has the volume of ``box``, projects back onto it, and does not
    contain ``t``.
    """
    if len(t) != box.dim + 1:
        raise DimensionMismatchError(
            f"lifting a {box.dim}-dimensional box needs a {box.dim + 1}-vector")
    return PeriodicBox(box.intervals + (PeriodicInterval.between(t[-1], t[-1]),))


def _check(box: PeriodicBox, points: PointSet):
    if not is_empty(box, points):
        raise InvariantViolationError(f"witness {box!r} contains a point")


def _window_lift(points: PointSet) -> tuple[PeriodicBox, list[int]]:
    window, inside = max_window(points.column(0), points.dim)
    box = PeriodicBox((window,))
    fallback = [_zero(points)] * points.dim
    for k in range(1, points.dim):
        if k - 1 < len(inside):
            t = points.points[inside[k - 1]]
        else:
            t = points.points[inside[-1]] if inside else fallback
        box = lift_box(box, t[:k + 1])
    return box, inside


def witness_theorem1(points: PointSet, best_axis: bool = False) -> WitnessResult:
    """Empty periodic box with volume at least ``min(1, d/n)``.

    With ``best_axis`` every axis is tried as the window axis and the longest
    window wins (first axis on ties); the default uses axis 0 only.
    """
    n, d = points.n, points.dim
    if n <= d:
        return witness_full_volume(points)
    best = None
    for axis in range(d if best_axis else 1):
        perm = [axis] + [a for a in range(d) if a != axis]
        box, inside = _window_lift(points.permute(perm))
        if best is None or box.intervals[0].length > best[0].intervals[0].length:
            best = (box, inside, axis, perm)
    box, inside, axis, perm = best
    intervals = [None] * d
    for pos, a in enumerate(perm):
        intervals[a] = box.intervals[pos]
    box = PeriodicBox(tuple(intervals))
    _check(box, points)
    return WitnessResult(box, box_volume(box), WitnessCase.WINDOW_LIFT,
                         tuple(inside), axis)

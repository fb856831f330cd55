"""Largest empty box by exhaustive candidate enumeration.

Every inclusion-maximal empty box has each side blocked by point coordinates
(grow a side until it hits a point, or until it covers the whole axis). So
the supremum over all boxes is a maximum over a finite candidate product:

* periodic ranges: on an axis with distinct coordinates ``c_1 < ... < c_m``
  the sides are the arcs ``(c_i, c_j) mod 1`` for ``i != j`` plus the ``m``
  arcs of length 1 anchored at some ``c_i``, ``m**2`` candidates in total;
* anchored ranges: the intervals ``(e_i, e_j)``, ``i < j``, over the endpoints
  ``{0} | {c_k} | {1}``.

The search runs in rank space. Each side is a pair of indices into the sorted
distinct coordinates of its axis, so deciding whether a point lies inside a
side is an integer comparison and is exact in either arithmetic mode. Only
lengths and volumes use the coordinate arithmetic.

Axes are visited in ascending order of distinct coordinates, candidates by
descending length, and a branch is cut once its partial volume falls below
the incumbent. On the last axis the remaining points (those inside all sides
chosen so far) are avoided by taking the widest gap between them directly,
instead of looping over that axis's candidates.

Ties in volume go to the lexicographically smallest
``(anchor_1, length_1, ..., anchor_d, length_d)``, which makes the answer
independent of how the search is split into partitions.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .core import (
    AnchoredBox,
    PeriodicBox,
    PeriodicInterval,
    PointSet,
    Real,
    arc_length,
    box_volume,
    is_empty,
)
from .errors import BudgetExceededError, InvalidInputError, InvariantViolationError

DEFAULT_BUDGET = 10**9


class Method(str, Enum):
    EXACT = "exact-enumeration"
    GAP_1D = "gap-scan-1d"
    SAMPLING = "sampling"
    WITNESS = "witness-construction"


@dataclass(frozen=True)
class DispersionResult:
    """Volume of an empty box together with the box itself.

    ``witness`` is ``None`` only for a sampling run that found no empty
    candidate; ``volume`` is then 0.
    """

    volume: Real
    witness: Optional[Union[PeriodicBox, AnchoredBox]]
    method: Method
    candidates_examined: int
    exact: bool


def certified(points: PointSet, witness, method: Method, examined: int,
              exact: bool) -> DispersionResult:
    """Build a result after checking that ``witness`` contains no point."""
    if not is_empty(witness, points):
        raise InvariantViolationError(f"witness {witness!r} contains a point")
    return DispersionResult(box_volume(witness), witness, method, examined, exact)


def _whole_box(points: PointSet, ranges: str):
    zero = Fraction(0) if points.exact else 0.0
    if ranges == "boxes":
        return AnchoredBox((zero,) * points.dim, (zero + 1,) * points.dim)
    return PeriodicBox.full((zero,) * points.dim)


class _Cand(NamedTuple):
    length: Real
    anchor: Real
    lo: int
    hi: int


class _PeriodicAxis:
    """Candidate arcs of one axis, in rank space."""

    def __init__(self, column: list[Real]):
        self.vals = sorted(set(column))
        index = {v: i for i, v in enumerate(self.vals)}
        self.ranks = [index[c] for c in column]
        m = len(self.vals)
        self.m = m
        self.count = m * m
        self._cands: list[_Cand] | None = None

    @property
    def cands(self) -> list[_Cand]:
        if self._cands is None:
            vals = self.vals
            self._cands = sorted(
                (_Cand(arc_length(vals[i], vals[j]), vals[i], i, j)
                 for i in range(self.m) for j in range(self.m)),
                key=lambda c: (-c.length, c.anchor, c.hi))
        return self._cands

    @staticmethod
    def inside(c: _Cand, r: int) -> bool:
        lo, hi = c.lo, c.hi
        if lo < hi:
            return lo < r < hi
        if lo > hi:
            return r > lo or r < hi
        return r != lo

    def free(self) -> _Cand:
        v = self.vals[0]
        return _Cand(arc_length(v, v), v, 0, 0)

    def best_avoiding(self, ranks: list[int]) -> _Cand:
        """Longest arc with no rank of ``ranks`` strictly inside it."""
        s = sorted(set(ranks))
        vals = self.vals
        if len(s) == 1:
            v = vals[s[0]]
            return _Cand(arc_length(v, v), v, s[0], s[0])
        best = None
        for a, b in zip(s, s[1:] + s[:1]):
            c = _Cand(arc_length(vals[a], vals[b]), vals[a], a, b)
            if best is None or c.length > best.length:
                best = c
        return best

    def interval(self, c: _Cand) -> PeriodicInterval:
        return PeriodicInterval.between(self.vals[c.lo], self.vals[c.hi])


class _BoxAxis:
    """Candidate sub-intervals of [0, 1] on one axis, in rank space."""

    def __init__(self, column: list[Real], exact: bool):
        zero = Fraction(0) if exact else 0.0
        self.vals = sorted(set(column) | {zero, zero + 1})
        index = {v: i for i, v in enumerate(self.vals)}
        self.ranks = [index[c] for c in column]
        k = len(self.vals)
        self.m = k
        self.count = k * (k - 1) // 2
        self._cands: list[_Cand] | None = None

    @property
    def cands(self) -> list[_Cand]:
        if self._cands is None:
            vals = self.vals
            k = len(vals)
            self._cands = sorted(
                (_Cand(vals[j] - vals[i], vals[i], i, j)
                 for i in range(k) for j in range(i + 1, k)),
                key=lambda c: (-c.length, c.anchor))
        return self._cands

    @staticmethod
    def inside(c: _Cand, r: int) -> bool:
        return c.lo < r < c.hi

    def free(self) -> _Cand:
        return _Cand(self.vals[-1] - self.vals[0], self.vals[0], 0, len(self.vals) - 1)

    def best_avoiding(self, ranks: list[int]) -> _Cand:
        stops = sorted(set(ranks) | {0, len(self.vals) - 1})
        vals = self.vals
        best = None
        for a, b in zip(stops, stops[1:]):
            c = _Cand(vals[b] - vals[a], vals[a], a, b)
            if best is None or c.length > best.length:
                best = c
        return best

    def interval(self, c: _Cand) -> tuple[Real, Real]:
        return self.vals[c.lo], self.vals[c.hi]


def _build_axes(points: PointSet, ranges: str):
    if ranges == "periodic":
        return [_PeriodicAxis(points.column(a)) for a in range(points.dim)]
    if ranges == "boxes":
        return [_BoxAxis(points.column(a), points.exact) for a in range(points.dim)]
    raise InvalidInputError(f"unknown range family {ranges!r}")


def _make_box(axes, choice, ranges: str):
    if ranges == "periodic":
        return PeriodicBox(tuple(ax.interval(c) for ax, c in zip(axes, choice)))
    sides = [ax.interval(c) for ax, c in zip(axes, choice)]
    return AnchoredBox(tuple(s[0] for s in sides), tuple(s[1] for s in sides))


def _key(choice) -> tuple:
    return tuple(x for c in choice for x in (c.anchor, c.length))


def _search_slice(axes, order, first, n):
    """Best (volume, key, choice) over the boxes whose first-visited side is in ``first``."""
    d = len(order)
    last = d - 1
    choice: list[_Cand | None] = [None] * d
    best: list = [None, None, None]

    def leaf(vol):
        if best[0] is None or vol > best[0]:
            best[:] = [vol, _key(choice), list(choice)]
        elif vol == best[0]:
            key = _key(choice)
            if key < best[1]:
                best[:] = [vol, key, list(choice)]

    def rec(level, active, partial):
        if not active:
            for lv in range(level, d):
                choice[order[lv]] = axes[order[lv]].free()
            leaf(partial)
            return
        a = order[level]
        ax = axes[a]
        ranks = ax.ranks
        if level == last:
            c = ax.best_avoiding([ranks[i] for i in active])
            vol = partial * c.length
            if best[0] is None or vol >= best[0]:
                choice[a] = c
                leaf(vol)
            return
        inside = ax.inside
        for c in (first if level == 0 else ax.cands):
            vol = partial * c.length
            if best[0] is not None and vol < best[0]:
                break
            choice[a] = c
            rec(level + 1, [i for i in active if inside(c, ranks[i])], vol)

    rec(0, list(range(n)), 1)
    return best


def _merge(results):
    best = None
    for r in results:
        if r[0] is None:
            continue
        if best is None or r[0] > best[0] or (r[0] == best[0] and r[1] < best[1]):
            best = r
    return best


def _exact(points: PointSet, ranges: str, budget: int, workers: int) -> DispersionResult:
    if points.n == 0:
        return certified(points, _whole_box(points, ranges), Method.EXACT, 1, True)
    axes = _build_axes(points, ranges)
    total = math.prod(ax.count for ax in axes)
    if total > budget:
        raise BudgetExceededError(total, budget)
    order = sorted(range(points.dim), key=lambda a: (axes[a].m, a))
    first = axes[order[0]].cands if points.dim > 1 else []
    parts = max(1, workers)
    if points.dim == 1 or parts == 1:
        results = [_search_slice(axes, order, first, points.n)]
    else:
        slices = [first[i::parts] for i in range(parts) if first[i::parts]]
        with ProcessPoolExecutor(max_workers=len(slices)) as pool:
            futures = [pool.submit(_search_slice, axes, order, s, points.n)
                       for s in slices]
            results = [f.result() for f in futures]
    best = _merge(results)
    return certified(points, _make_box(axes, best[2], ranges), Method.EXACT, total, True)


def exact_dispersion_periodic(points: PointSet, budget: int = DEFAULT_BUDGET,
                              workers: int = 1) -> DispersionResult:
    """Exact dispersion with respect to periodic boxes on the torus.

    ``workers > 1`` splits the first-visited axis's candidates into that many
    interleaved slices and searches them in separate processes; the result
    does not depend on the split.
    """
    return _exact(points, "periodic", budget, workers)


def exact_dispersion_boxes(points: PointSet, budget: int = DEFAULT_BUDGET,
                           workers: int = 1) -> DispersionResult:
    """Exact dispersion with respect to ordinary boxes inside the unit cube."""
    return _exact(points, "boxes", budget, workers)


def axis_candidates(points: PointSet, axis: int) -> list[PeriodicInterval]:
    """All candidate arcs on ``axis`` (0-based), longest first."""
    if points.n == 0:
        raise InvalidInputError("candidate arcs need at least one point")
    if not 0 <= axis < points.dim:
        raise InvalidInputError(f"axis {axis} out of range 0..{points.dim - 1}")
    ax = _PeriodicAxis(points.column(axis))
    return [ax.interval(c) for c in ax.cands]


def cyclic_gap_dispersion_1d(points: PointSet) -> DispersionResult:
    """Largest gap between consecutive distinct values around the circle."""
    if points.dim != 1:
        raise InvalidInputError(f"gap scan needs d = 1, got d = {points.dim}")
    if points.n == 0:
        return certified(points, _whole_box(points, "periodic"), Method.GAP_1D, 0, True)
    vals = sorted(set(points.column(0)))
    if len(vals) == 1:
        box = PeriodicBox.full(vals)
        return certified(points, box, Method.GAP_1D, 1, True)
    best = (vals[0] + 1 - vals[-1], vals[-1], vals[0])
    for lo, hi in zip(vals, vals[1:]):
        gap = hi - lo
        if gap > best[0] or (gap == best[0] and lo < best[1]):
            best = (gap, lo, hi)
    gap, lo, hi = best
    box = PeriodicBox((PeriodicInterval(lo, gap, hi),))
    return certified(points, box, Method.GAP_1D, len(vals), True)


def sampled_dispersion_lower_bound(points: PointSet, trials: int, seed: int,
                                   ranges: str = "periodic") -> DispersionResult:
    """Best empty box among ``trials`` random candidate boxes.

    Each side is drawn uniformly from its axis's candidate list using
    ``random.Random(seed)``. The volume never exceeds the exact dispersion.
    """
    if trials < 1:
        raise InvalidInputError("trials must be >= 1")
    if points.n == 0:
        return certified(points, _whole_box(points, ranges), Method.SAMPLING, 0, False)
    axes = _build_axes(points, ranges)
    rng = random.Random(seed)
    best = None
    for _ in range(trials):
        choice = [ax.cands[rng.randrange(len(ax.cands))] for ax in axes]
        if any(all(ax.inside(c, ax.ranks[i]) for ax, c in zip(axes, choice))
               for i in range(points.n)):
            continue
        vol = math.prod(c.length for c in choice)
        key = _key(choice)
        if best is None or vol > best[0] or (vol == best[0] and key < best[1]):
            best = (vol, key, choice)
    if best is None:
        return DispersionResult(0, None, Method.SAMPLING, trials, False)
    return certified(points, _make_box(axes, best[2], ranges), Method.SAMPLING,
                     trials, False)

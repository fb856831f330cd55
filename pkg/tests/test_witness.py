from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import coords, point_sets
from torus_dispersion import (
    DimensionMismatchError,
    PeriodicBox,
    PeriodicInterval,
    WitnessCase,
    WrongCaseError,
    box_contains,
    box_volume,
    canonicalize,
    exact_dispersion_periodic,
    is_empty,
    lift_box,
    max_window,
    theorem1_bound,
    window_lengths,
    witness_full_volume,
    witness_theorem1,
)

F = Fraction


class TestFullVolume:
    def test_single_point(self):
        w = witness_full_volume(canonicalize([[0.5, 0.5]]))
        assert w.box.anchors == (0.5, 0.5) and w.box.lengths == (1.0, 1.0)
        assert w.volume == 1 and w.case is WitnessCase.FULL_VOLUME

    def test_reuses_last_point(self):
        w = witness_full_volume(canonicalize([[0.1, 0.2, 0.3], [0.4, 0.5, 0.6]]))
        assert w.box.anchors == (0.1, 0.5, 0.6)
        assert w.box.lengths == (1.0, 1.0, 1.0)
        assert w.excluded_points == (0, 1)

    def test_empty_set(self):
        w = witness_full_volume(canonicalize([], dim=2))
        assert w.box.anchors == (0.0, 0.0) and w.volume == 1

    def test_too_many_points(self):
        with pytest.raises(WrongCaseError):
            witness_full_volume(canonicalize([[0.1], [0.2]]))

    @given(st.integers(1, 6).flatmap(
        lambda d: point_sets(dims=[d], min_n=1, max_n=d)))
    def test_always_empty(self, ps):
        w = witness_full_volume(ps)
        assert not any(box_contains(w.box, p) for p in ps)
        assert w.volume == 1


class TestMaxWindow:
    def test_four_values(self):
        vals = [F(1, 10), F(3, 10), F(3, 5), F(4, 5)]
        assert window_lengths(vals, 2) == [F(1, 2)] * 4
        window, inside = max_window(vals, 2)
        assert (window.anchor, window.length) == (F(1, 10), F(1, 2))
        assert inside == [1]

    def test_four_values_float(self):
        window, inside = max_window([0.1, 0.3, 0.6, 0.8], 2)
        assert (window.anchor, window.length) == (0.1, 0.5) and inside == [1]

    def test_equispaced_d1(self):
        window, inside = max_window([0.0, 0.25, 0.5, 0.75], 1)
        assert window.length == 0.25 and inside == []

    def test_unsorted_input_indices(self):
        window, inside = max_window([F(4, 5), F(3, 10), F(1, 10), F(3, 5)], 2)
        assert window.anchor == F(1, 10) and inside == [1]

    def test_wrong_case(self):
        with pytest.raises(WrongCaseError):
            max_window([0.1, 0.2], 2)

    def test_all_equal(self):
        window, inside = max_window([F(1, 3)] * 4, 2)
        assert window.length == 1 and inside == []

    @given(st.data())
    def test_lengths_sum_to_d(self, data):
        n = data.draw(st.integers(2, 12))
        d = data.draw(st.integers(1, n - 1))
        vals = data.draw(st.lists(coords(), min_size=n, max_size=n))
        lengths = window_lengths(vals, d)
        assert sum(lengths) == d
        window, inside = max_window(vals, d)
        assert window.length == max(lengths) >= F(d, n)
        assert len(inside) <= d - 1
        truly_inside = [i for i, v in enumerate(vals) if window.contains(v)]
        assert sorted(inside) == truly_inside


class TestLiftBox:
    def test_example(self):
        base = PeriodicBox((PeriodicInterval(0.1, 0.5),))
        box = lift_box(base, (0.3, 0.7))
        assert box.anchors == (0.1, 0.7) and box.lengths == (0.5, 1.0)
        assert box.volume == 0.5
        assert not box_contains(box, (0.3, 0.7))
        assert box.project(1) == base

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            lift_box(PeriodicBox.full([0.1]), (0.1, 0.2, 0.3))

    @given(st.data())
    def test_random_instances(self, data):
        k = data.draw(st.integers(1, 4))
        base = PeriodicBox(tuple(
            PeriodicInterval.between(data.draw(coords()), data.draw(coords()))
            for _ in range(k)))
        t = tuple(data.draw(coords()) for _ in range(k + 1))
        box = lift_box(base, t)
        assert not box_contains(box, t)
        assert box_volume(box) == box_volume(base)
        assert box.project(k) == base


class TestTheorem1Witness:
    def test_worked_instance(self, worked_exact):
        w = witness_theorem1(worked_exact)
        assert w.case is WitnessCase.WINDOW_LIFT
        assert w.box.anchors == (F(1, 10), F(7, 10))
        assert w.box.lengths == (F(1, 2), 1)
        assert w.volume == F(1, 2)
        assert w.excluded_points == (1,) and w.window_axis == 0
        assert is_empty(w.box, worked_exact)

    def test_n_le_d(self):
        w = witness_theorem1(canonicalize([[0.9, 0.1, 0.4], [0.2, 0.2, 0.2]]))
        assert w.volume == 1

    def test_1d(self):
        w = witness_theorem1(canonicalize([["0.1"], ["0.2"], ["0.9"]], exact=True))
        assert w.volume == F(7, 10)

    def test_all_points_equal(self):
        ps = canonicalize([[0.3, 0.6]] * 7)
        assert witness_theorem1(ps).volume == 1

    @settings(max_examples=80, deadline=None)
    @given(point_sets(max_d=4, max_n=12))
    def test_bound_and_emptiness(self, ps):
        w = witness_theorem1(ps)
        assert w.volume >= theorem1_bound(ps.n, ps.dim, exact=True)
        assert is_empty(w.box, ps)
        assert w.volume == box_volume(w.box)
        if ps.n > ps.dim:
            assert len(w.excluded_points) <= ps.dim - 1

    @settings(max_examples=40, deadline=None)
    @given(point_sets(max_d=3, max_n=8))
    def test_not_above_exact(self, ps):
        assert witness_theorem1(ps).volume <= exact_dispersion_periodic(ps).volume

    @settings(max_examples=40, deadline=None)
    @given(point_sets(max_d=4, max_n=10))
    def test_best_axis(self, ps):
        plain = witness_theorem1(ps)
        best = witness_theorem1(ps, best_axis=True)
        assert best.volume >= plain.volume
        assert is_empty(best.box, ps)

    @given(point_sets(max_d=3, max_n=10), st.data())
    def test_translation_keeps_volume(self, ps, data):
        v = [data.draw(coords()) for _ in range(ps.dim)]
        assert witness_theorem1(ps.translate(v)).volume == witness_theorem1(ps).volume

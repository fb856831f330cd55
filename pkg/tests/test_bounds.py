import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from torus_dispersion import (
    HINRICHS_C,
    InvalidInputError,
    ahr_lower_bound,
    bound_report,
    hinrichs_N_lower,
    inverse_N0_lower,
    split_cube_bound,
    theorem1_bound,
)


@pytest.mark.parametrize("n, d, expected", [(4, 2, 0.5), (3, 5, 1.0), (1000, 10, 0.01), (0, 1, 1.0)])
def test_theorem1(n, d, expected):
    assert theorem1_bound(n, d) == expected


def test_theorem1_exact():
    assert theorem1_bound(6, 4, exact=True) == Fraction(2, 3)
    with pytest.raises(InvalidInputError):
        theorem1_bound(3, 0)


@given(st.integers(0, 200), st.integers(1, 50))
def test_theorem1_monotone(n, d):
    assert theorem1_bound(n + 1, d) <= theorem1_bound(n, d)
    assert theorem1_bound(n, d + 1) >= theorem1_bound(n, d)
    assert 0 < theorem1_bound(n, d) <= 1


def test_inverse_n0():
    assert inverse_N0_lower(0.1, 5) == pytest.approx(50)
    assert inverse_N0_lower(0.5, 1) == 2
    assert inverse_N0_lower(1 - 1e-12, 3) == pytest.approx(3)
    for eps in (0.0, 1.0, -0.5):
        with pytest.raises(InvalidInputError):
            inverse_N0_lower(eps, 3)


@pytest.mark.parametrize("n, d, expected", [(1, 2, 0.125), (7, 2, 1 / 32), (1, 16, 0.2)])
def test_ahr(n, d, expected):
    assert ahr_lower_bound(n, d) == pytest.approx(expected, rel=1e-15)


def test_ahr_domain():
    with pytest.raises(InvalidInputError):
        ahr_lower_bound(3, 1)


def test_hinrichs_constant():
    assert HINRICHS_C >= 0.004229
    # 30-digit reference value of 1/(32 e^2)
    assert HINRICHS_C == pytest.approx(0.00422922760114414662, rel=1e-15)


def test_hinrichs_value():
    assert hinrichs_N_lower(0.001, 10) == pytest.approx(42.2922760114, rel=1e-9)
    with pytest.raises(InvalidInputError, match="32 e"):
        hinrichs_N_lower(HINRICHS_C, 10)


@given(st.floats(1e-6, HINRICHS_C, exclude_max=True), st.integers(1, 100))
def test_hinrichs_below_theorem1(eps, d):
    assert hinrichs_N_lower(eps, d) < inverse_N0_lower(eps, d)


def test_split_cube():
    assert split_cube_bound(0) == 1
    assert split_cube_bound(3) == 0.25


def test_report():
    r = bound_report(4, 2, eps=0.001)
    assert r.theorem1 == 0.5 and r.split_cube == 0.2
    assert r.ahr_lower == pytest.approx(1 / 20)
    assert r.n0_lower == pytest.approx(2000)
    assert r.hinrichs_n_lower == pytest.approx(HINRICHS_C * 2000)
    r = bound_report(4, 1, eps=0.5)
    assert r.ahr_lower is None and r.hinrichs_n_lower is None
    assert math.isclose(r.to_dict()["n0_lower"], 2)

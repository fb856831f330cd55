import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from torus_dispersion import canonicalize  # noqa: E402

WORKED = [[0.1, 0.3], [0.3, 0.7], [0.6, 0.2], [0.8, 0.9]]


@pytest.fixture
def worked_exact():
    return canonicalize([[str(c) for c in p] for p in WORKED], exact=True)


@pytest.fixture
def worked_float():
    return canonicalize(WORKED)


def coords(denominators=(7, 8, 10, 1000)):
    """Rationals in [0, 1); small denominators make coincident coordinates likely."""
    return st.sampled_from(denominators).flatmap(
        lambda q: st.integers(0, q - 1).map(lambda k: Fraction(k, q)))


@st.composite
def point_sets(draw, max_d=3, max_n=6, min_n=0, dims=None):
    d = draw(st.sampled_from(dims) if dims else st.integers(1, max_d))
    n = draw(st.integers(min_n, max_n))
    pts = draw(st.lists(st.tuples(*[coords()] * d), min_size=n, max_size=n))
    return canonicalize(pts, dim=d, exact=True)

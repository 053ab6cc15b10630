import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from habicht.poly import Poly

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

small_ints = st.integers(min_value=-20, max_value=20)


@st.composite
def polys(draw, max_degree=6, nonzero=False, coeffs=small_ints):
    deg = draw(st.integers(min_value=0, max_value=max_degree))
    body = draw(st.lists(coeffs, min_size=deg, max_size=deg))
    lead = draw(coeffs.filter(bool)) if nonzero else draw(coeffs)
    return Poly(body + [lead])


@st.composite
def matrices(draw, min_rows=1, max_rows=5, wide_by=0, coeffs=small_ints):
    p = draw(st.integers(min_value=min_rows, max_value=max_rows))
    q = p + draw(st.integers(min_value=0, max_value=wide_by))
    return [draw(st.lists(coeffs, min_size=q, max_size=q)) for _ in range(p)]


def rand_poly(rng: random.Random, degree: int, bound: int = 99) -> Poly:
    lead = 0
    while not lead:
        lead = rng.randint(-bound, bound)
    return Poly([rng.randint(-bound, bound) for _ in range(degree)] + [lead])


@pytest.fixture
def rng():
    return random.Random(20240611)

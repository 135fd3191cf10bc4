import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from nilalg.magma import Monomial, Polynomial, X, Y, monomials_of_bidegree, pure_x_monomials

settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def monomials(draw, max_degree=6, gens="xy"):
    """Random canonical monomial built bottom-up."""
    d = draw(st.integers(1, max_degree))

    def build(d):
        if d == 1:
            return Monomial.leaf(draw(st.sampled_from(gens)))
        k = draw(st.integers(1, d - 1))
        return Monomial.product(build(k), build(d - k))

    return build(d)


@st.composite
def polynomials(draw, max_degree=6, gens="xy", max_terms=4):
    n = draw(st.integers(0, max_terms))
    p = Polynomial()
    for _ in range(n):
        p.add_term(draw(monomials(max_degree, gens)), draw(coeffs))
    return p


@st.composite
def y_linear_monomials(draw, max_xdeg=8):
    xdeg = draw(st.integers(0, max_xdeg))
    pool = monomials_of_bidegree(xdeg, 1)
    return pool[draw(st.integers(0, len(pool) - 1))]


@pytest.fixture
def rng():
    return random.Random(20240611)

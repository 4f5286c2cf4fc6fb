from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from semismall.motives import abelian_surface, curve, k3_surface, projective_space
from semismall.series import POINCARE_VARS, TruncatedSeries, z_poly

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def z_polys(draw, max_terms=3, max_deg=4):
    terms = draw(st.dictionaries(st.integers(0, max_deg), rationals, max_size=max_terms))
    return z_poly(terms)


@st.composite
def series_2var(draw, bounds=(3, 2)):
    coeffs = draw(
        st.dictionaries(
            st.tuples(st.integers(0, bounds[0]), st.integers(0, bounds[1])),
            z_polys(),
            max_size=5,
        )
    )
    return TruncatedSeries(("t", "s1"), bounds, POINCARE_VARS, coeffs)


@pytest.fixture(scope="session")
def surfaces():
    return [projective_space(2), k3_surface(), abelian_surface()]


@pytest.fixture(scope="session")
def curves():
    return [projective_space(1), curve(1, "E"), curve(2, "D")]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: runs the full selfcheck matrix")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import REPORT

    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)

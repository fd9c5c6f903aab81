import pytest
from hypothesis import strategies as st

from it2mabac import GeneralizedTrapezoid, IT2TrFN, load_example_problem, run


def finite(lo, hi):
    return st.floats(lo, hi, allow_nan=False, allow_infinity=False)


@st.composite
def it2trfns(draw, lo=0.0, hi=10.0):
    """A valid IT2TrFN with sorted endpoints and lower height <= upper height."""
    upper = sorted(draw(st.lists(finite(lo, hi), min_size=4, max_size=4)))
    lower = sorted(draw(st.lists(finite(lo, hi), min_size=4, max_size=4)))
    h_upper = draw(finite(0.05, 1.0))
    fraction = draw(finite(0.05, 1.0))
    return IT2TrFN(
        GeneralizedTrapezoid(*upper, h_upper),
        GeneralizedTrapezoid(*lower, h_upper * fraction),
    )


@pytest.fixture(scope="session")
def example_problem():
    return load_example_problem()


@pytest.fixture(scope="session")
def example_trace(example_problem):
    return run(example_problem)

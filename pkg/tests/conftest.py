import pytest

from graphclif import run_census


@pytest.fixture(scope="session")
def censuses_to_8():
    """Full LC-class censuses for n = 2..8, shared across test modules."""
    return {n: run_census(n) for n in range(2, 9)}

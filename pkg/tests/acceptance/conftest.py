import pytest

import polytrack
from tests.utilities import run_preset


@pytest.fixture(scope="session")
def long_rarefactions() -> polytrack.Trace:
    return run_preset("two_rarefactions", n=80, t_max=1000.0, gamma=5 / 3)

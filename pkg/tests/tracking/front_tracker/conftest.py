import pytest

import polytrack
from tests.utilities import run_preset


@pytest.fixture(scope="session")
def two_rarefactions() -> polytrack.Trace:
    return run_preset("two_rarefactions", n=10, t_max=2.0)


@pytest.fixture(scope="session")
def compression_pair() -> polytrack.Trace:
    return run_preset("compression_pair", n=10, t_max=50.0)

import pytest

import polytrack
from tests.utilities import run_preset


@pytest.fixture(scope="session")
def two_rarefactions() -> polytrack.Trace:
    return run_preset("two_rarefactions", n=10, t_max=1.0)


@pytest.fixture(scope="session")
def compression_pair() -> polytrack.Trace:
    return run_preset("compression_pair", n=10, t_max=50.0)


@pytest.fixture(scope="session")
def mixed_characters() -> polytrack.Trace:
    return run_preset(
        {
            "name": "custom",
            "r_points": [[0.25, 0.0], [0.75, 0.4], [1.0, 0.4], [1.05, 0.2]],
            "s_points": [[-0.75, 0.0], [-0.25, 0.4]],
        },
        n=10,
        t_max=3.0,
    )

import pytest

import polytrack

from .case_data import CaseData


@pytest.fixture(
    scope="session",
    params=(
        lambda name: CaseData(
            params=polytrack.GasParams(pressure_coefficient=1.0, gamma=2.0),
            n=10,
            j_min=-4,
            j_max=6,
            volumes={-1: 0.932899, 0: 1.0, 1: 1.074607},
            name=name,
        ),
        lambda name: CaseData(
            params=polytrack.GasParams(
                pressure_coefficient=1.0,
                gamma=5 / 3,
            ),
            n=20,
            j_min=-10,
            j_max=10,
            volumes={0: 1.0},
            name=name,
        ),
        lambda name: CaseData(
            params=polytrack.GasParams(
                pressure_coefficient=0.5,
                gamma=1.4,
            ),
            n=5,
            j_min=-3,
            j_max=8,
            volumes={0: 1.0},
            name=name,
        ),
    ),
)
def case_data(request: pytest.FixtureRequest) -> CaseData:
    return request.param(
        f"{request.fixturename}{request.param_index}",
    )

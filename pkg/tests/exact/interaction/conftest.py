import pytest

import polytrack

from .case_data import CaseData


@pytest.fixture(
    scope="session",
    params=(
        lambda name: CaseData(
            config=polytrack.exact.InteractionConfig(
                t_bar=1.0,
                S_bar=1.0,
                params=polytrack.GasParams(1.0, 5 / 3),
            ),
            S=0.5,
            R=-0.5,
            z=-0.125,
            time=5.0,
            name=name,
        ),
        lambda name: CaseData(
            config=polytrack.exact.InteractionConfig(
                t_bar=1.0,
                S_bar=1.0,
                params=polytrack.GasParams(1.0, 7 / 5),
            ),
            S=0.5,
            R=-0.5,
            z=-0.125,
            time=14.75,
            name=name,
        ),
        lambda name: CaseData(
            config=polytrack.exact.InteractionConfig(
                t_bar=2.0,
                S_bar=1.0,
                params=polytrack.GasParams(1.0, 5 / 3),
            ),
            S=1.0,
            R=-1.0,
            z=0.0,
            time=2.0,
            name=name,
        ),
        lambda name: CaseData(
            config=polytrack.exact.InteractionConfig(
                t_bar=1.0,
                S_bar=1.0,
                params=polytrack.GasParams(1.0, 5 / 3),
            ),
            S=0.01,
            R=-0.01,
            z=-24.5025,
            time=500050.0,
            name=name,
        ),
    ),
)
def case_data(request: pytest.FixtureRequest) -> CaseData:
    return request.param(
        f"{request.fixturename}{request.param_index}",
    )

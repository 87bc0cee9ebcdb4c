import pytest

import polytrack

from .case_data import CaseData


@pytest.fixture(scope="session")
def grid() -> polytrack.PressureGrid:
    return polytrack.build_grid(
        params=polytrack.GasParams(pressure_coefficient=1.0, gamma=2.0),
        n=10,
        j_min=-4,
        j_max=4,
    )


@pytest.fixture(
    scope="session",
    params=(
        lambda name: CaseData(
            left=polytrack.StandardState(10, 0, 0),
            right=polytrack.StandardState(10, 0, -2),
            middle=polytrack.StandardState(10, -1, -1),
            backward_strength=-1,
            forward_strength=1,
            backward_slope=-1.49029,
            forward_slope=None,
            name=name,
        ),
        lambda name: CaseData(
            left=polytrack.StandardState(10, 0, 0),
            right=polytrack.StandardState(10, 1, 1),
            middle=polytrack.StandardState(10, 1, 1),
            backward_strength=1,
            forward_strength=0,
            backward_slope=-1.34035,
            forward_slope=None,
            name=name,
        ),
        lambda name: CaseData(
            left=polytrack.StandardState(10, 0, 0),
            right=polytrack.StandardState(10, 1, -1),
            middle=polytrack.StandardState(10, 0, 0),
            backward_strength=0,
            forward_strength=1,
            backward_slope=None,
            forward_slope=1.49029,
            name=name,
        ),
        lambda name: CaseData(
            left=polytrack.StandardState(10, 0, 0),
            right=polytrack.StandardState(10, 0, 0),
            middle=polytrack.StandardState(10, 0, 0),
            backward_strength=0,
            forward_strength=0,
            backward_slope=None,
            forward_slope=None,
            name=name,
        ),
    ),
)
def case_data(request: pytest.FixtureRequest) -> CaseData:
    return request.param(
        f"{request.fixturename}{request.param_index}",
    )

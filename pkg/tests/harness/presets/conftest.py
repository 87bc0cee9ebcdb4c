import pytest

from tests.harness.presets.case_data import CaseData


@pytest.fixture(
    scope="session",
    params=(
        lambda name: CaseData(preset=3, path="preset", name=name),
        lambda name: CaseData(
            preset={"strength": 0.2},
            path="preset",
            name=name,
        ),
        lambda name: CaseData(
            preset={"name": "two_rarefactions", "strength": -0.2},
            path="preset.strength",
            name=name,
        ),
        lambda name: CaseData(
            preset={"name": "two_rarefactions", "steps": 3},
            path="preset.steps",
            name=name,
        ),
        lambda name: CaseData(
            preset={"name": "compression_pair", "steps": 1},
            path="preset.steps",
            name=name,
        ),
        lambda name: CaseData(
            preset={"name": "simple_wave", "direction": "sideways"},
            path="preset.direction",
            name=name,
        ),
        lambda name: CaseData(
            preset={"name": "simple_wave", "compressive": 1},
            path="preset.compressive",
            name=name,
        ),
        lambda name: CaseData(
            preset={"name": "custom", "r_points": [[0.0, 0.0]]},
            path="preset.s_points",
            name=name,
        ),
        lambda name: CaseData(
            preset={
                "name": "custom",
                "r_points": [[1.0, 0.0], [0.0, 0.2]],
                "s_points": [[0.0, 0.0]],
            },
            path="preset.r_points",
            name=name,
        ),
        lambda name: CaseData(
            preset={
                "name": "custom",
                "r_points": [[0.0, 0.0, 1.0]],
                "s_points": [[0.0, 0.0]],
            },
            path="preset.r_points.0",
            name=name,
        ),
    ),
)
def invalid_preset(request: pytest.FixtureRequest) -> CaseData:
    return request.param(
        f"{request.fixturename}{request.param_index}",
    )

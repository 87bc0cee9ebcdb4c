import pytest

from tests.harness.config.case_data import CaseData


@pytest.fixture(
    scope="session",
    params=(
        lambda name: CaseData(
            data={
                "K": 1.0,
                "gamma": 2.0,
                "n": 10,
                "t_max": 1.0,
                "preset": "x",
            },
            mode="run",
            path="preset.name",
            name=name,
        ),
        lambda name: CaseData(
            data={"K": 1.0, "gamma": 3.0, "n": 10, "t_max": 1.0},
            mode="run",
            path="gamma",
            name=name,
        ),
        lambda name: CaseData(
            data={"K": 1.0, "gamma": 0.9},
            mode="exact",
            path="gamma",
            name=name,
        ),
        lambda name: CaseData(
            data={
                "K": 1.0,
                "gamma": 2.0,
                "n": 2,
                "preset": "two_rarefactions",
                "t_max": 1.0,
            },
            mode="run",
            path="n",
            name=name,
        ),
        lambda name: CaseData(
            data={
                "K": 1.0,
                "gamma": 2.0,
                "n_ladder": [10, 20, 10],
                "preset": "two_rarefactions",
                "t_max": 1.0,
            },
            mode="run",
            path="n_ladder",
            name=name,
        ),
        lambda name: CaseData(
            data={
                "K": 1.0,
                "gamma": 2.0,
                "n": 10,
                "preset": "two_rarefactions",
                "t_max": -1.0,
            },
            mode="run",
            path="t_max",
            name=name,
        ),
        lambda name: CaseData(
            data={"K": 1.0, "gamma": 2.0, "domain": [1.0, -1.0]},
            mode="exact",
            path="domain",
            name=name,
        ),
        lambda name: CaseData(
            data={"K": 1.0, "gamma": 2.0, "colour": "red"},
            mode="exact",
            path="colour",
            name=name,
        ),
        lambda name: CaseData(
            data={"K": 1.0, "gamma": 2.0, "checks": {"tracing": "yes"}},
            mode="exact",
            path="checks.tracing",
            name=name,
        ),
        lambda name: CaseData(
            data={"K": 1.0, "gamma": 2.0, "outputs": ["trace_json", "x"]},
            mode="exact",
            path="outputs.1",
            name=name,
        ),
        lambda name: CaseData(
            data={"K": 1.0, "gamma": 2.0, "exact": {"samples": [2.0]}},
            mode="exact",
            path="exact.samples.0",
            name=name,
        ),
        lambda name: CaseData(
            data={"K": -1.0, "gamma": 2.0},
            mode="exact",
            path="K",
            name=name,
        ),
        lambda name: CaseData(
            data={"gamma": 2.0},
            mode="exact",
            path="K",
            name=name,
        ),
    ),
)
def invalid_config(request: pytest.FixtureRequest) -> CaseData:
    return request.param(
        f"{request.fixturename}{request.param_index}",
    )

import pytest

import polytrack
from tests.utilities import run_preset

from .case_data import CaseData

_R_R = polytrack.Character.R_R
_C_C = polytrack.Character.C_C


def _diamond(
    block_type: polytrack.BlockType,
    west: float,
    east: float,
    north: float,
    edges: int = 4,
) -> polytrack.analysis.CompleteDiamond:
    refs: list[polytrack.EdgeRef | None] = [(0, 0), (1, 0), (2, 0), (3, 0)]
    refs[edges:] = [None] * (4 - edges)
    sw, se, nw, ne = refs
    return polytrack.analysis.CompleteDiamond(
        block_id=0,
        kind=polytrack.analysis.DiamondKind.INTERIOR,
        block_type=block_type,
        state_j=1,
        sw=sw,
        nw=nw,
        se=se,
        ne=ne,
        south=(0.0, 1.0),
        west=(west, 1.5),
        east=(east, 1.5),
        north=(north, 2.0),
        slopes={"sw": -2.0, "se": 2.0, "nw": 1.0, "ne": -1.0},
    )


@pytest.fixture(
    scope="session",
    params=(
        lambda name: CaseData(
            diamond=_diamond((_R_R, _R_R), -1.0, 1.0, 0.0),
            outcome=polytrack.CheckOutcome.PASS,
            name=name,
        ),
        lambda name: CaseData(
            diamond=_diamond((_R_R, _R_R), -1.0, 2.0, 0.75),
            outcome=polytrack.CheckOutcome.PASS,
            name=name,
        ),
        lambda name: CaseData(
            diamond=_diamond((_R_R, _R_R), -1.0, 2.0, 0.5),
            outcome=polytrack.CheckOutcome.FAIL,
            name=name,
        ),
        lambda name: CaseData(
            diamond=_diamond((_R_R, _C_C), -1.0, 1.0, 0.0),
            outcome=polytrack.CheckOutcome.PASS,
            name=name,
        ),
        lambda name: CaseData(
            diamond=_diamond((_R_R, _C_C), -1.0, 1.0, 0.5),
            outcome=polytrack.CheckOutcome.FAIL,
            name=name,
        ),
        lambda name: CaseData(
            diamond=_diamond((_C_C, _R_R), -1.0, 1.0, -0.5),
            outcome=polytrack.CheckOutcome.FAIL,
            name=name,
        ),
        lambda name: CaseData(
            diamond=_diamond((_C_C, _R_R), -1.0, 1.0, 0.25),
            outcome=polytrack.CheckOutcome.PASS,
            name=name,
        ),
        lambda name: CaseData(
            diamond=_diamond((_C_C, _C_C), -1.0, 1.0, 0.0),
            outcome=polytrack.CheckOutcome.NOT_APPLICABLE,
            name=name,
        ),
        lambda name: CaseData(
            diamond=_diamond((_R_R, _R_R), -1.0, 1.0, 0.0, edges=2),
            outcome=polytrack.CheckOutcome.NOT_APPLICABLE,
            name=name,
        ),
    ),
)
def case_data(request: pytest.FixtureRequest) -> CaseData:
    return request.param(
        f"{request.fixturename}{request.param_index}",
    )


@pytest.fixture(scope="session")
def fine_rarefactions() -> polytrack.Trace:
    return run_preset("two_rarefactions", n=20, t_max=50.0, gamma=5 / 3)

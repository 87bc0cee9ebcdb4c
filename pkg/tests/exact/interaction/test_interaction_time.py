import numpy as np
import pytest

import polytrack
from tests.exact.interaction.case_data import CaseData


def test_hypergeometric_argument(case_data: CaseData) -> None:
    z = polytrack.exact.hypergeometric_argument(
        case_data.config,
        case_data.S,
        case_data.R,
    )
    assert z <= 0
    assert np.isclose(z, case_data.z, rtol=1e-12)


def test_t_interaction_hyper(case_data: CaseData) -> None:
    time = polytrack.exact.t_interaction_hyper(
        case_data.config,
        case_data.S,
        case_data.R,
    )
    assert np.isclose(time, case_data.time, rtol=1e-10)


def test_t_interaction_legendre(case_data: CaseData) -> None:
    time = polytrack.exact.t_interaction_legendre(
        case_data.config,
        case_data.S,
        case_data.R,
    )
    assert np.isclose(time, case_data.time, rtol=1e-10)


def test_outside_interaction_region(case_data: CaseData) -> None:
    with pytest.raises(polytrack.InvariantDomainError):
        polytrack.exact.t_interaction_hyper(
            case_data.config,
            2 * case_data.config.S_bar,
            case_data.R,
        )
    with pytest.raises(polytrack.InvariantDomainError):
        polytrack.exact.t_interaction_hyper(
            case_data.config,
            case_data.S,
            0.0,
        )

import numpy as np
import pytest

import polytrack


@pytest.fixture
def grid() -> polytrack.PressureGrid:
    return polytrack.build_grid(polytrack.GasParams(1.0, 2.0), n=10)


def test_two_rarefactions(grid: polytrack.PressureGrid) -> None:
    r0, s0 = polytrack.two_rarefactions(10)
    profile = polytrack.sample_initial_data(grid, r0, s0, (-2.0, 2.0))
    assert np.allclose(profile.breakpoints, (-0.5, 0.5), atol=1e-10)
    assert profile.states == (
        polytrack.StandardState(10, 0, 0),
        polytrack.StandardState(10, 1, -1),
        polytrack.StandardState(10, 2, 0),
    )
    assert profile.get_index_range() == (-1, 0)
    assert profile.state_at(-1.0) == profile.states[0]
    assert profile.state_at(0.0) == profile.states[1]
    assert profile.state_at(profile.breakpoints[1]) == profile.states[2]

    k_min, k_max = grid.get_index_range()
    assert k_min <= -2
    assert k_max >= 1


def test_adjacent_states_are_one_step_apart(
    grid: polytrack.PressureGrid,
) -> None:
    r0, s0 = polytrack.custom(
        10,
        r_points=[[-1.0, 0.0], [1.0, 0.6]],
        s_points=[[-1.0, 0.3], [1.0, -0.5]],
    )
    profile = polytrack.sample_initial_data(grid, r0, s0, (-1.5, 1.5))
    for left, right in zip(profile.states, profile.states[1:], strict=False):
        assert abs(right.get_doubled_k() - left.get_doubled_k()) <= 2
        assert abs(right.get_doubled_l() - left.get_doubled_l()) <= 2
        polytrack.solve_riemann(grid, left, right)
    assert all(np.diff(profile.breakpoints) > 0)


def test_merged_crossings(grid: polytrack.PressureGrid) -> None:
    r0, s0 = polytrack.custom(
        10,
        r_points=[[-0.5, 0.0], [0.5, 0.2]],
        s_points=[[-0.5, 0.0], [0.5, 0.2]],
    )
    profile = polytrack.sample_initial_data(grid, r0, s0, (-1.0, 1.0))
    assert len(profile.breakpoints) == 1
    assert profile.states[-1] == polytrack.StandardState(10, 2, 0)


def test_constants_outside(grid: polytrack.PressureGrid) -> None:
    r0, s0 = polytrack.two_rarefactions(10)
    polytrack.sample_initial_data(
        grid,
        r0,
        s0,
        (-2.0, 2.0),
        constants_outside=(
            polytrack.StandardState(10, 0, 0),
            polytrack.StandardState(10, 2, 0),
        ),
    )
    with pytest.raises(polytrack.SamplingError):
        polytrack.sample_initial_data(
            grid,
            r0,
            s0,
            (-2.0, 2.0),
            constants_outside=(
                polytrack.StandardState(10, 0, 0),
                polytrack.StandardState(10, 0, 0),
            ),
        )


def test_vacuum(grid: polytrack.PressureGrid) -> None:
    limit = grid.get_params().phi_limit()
    r0, s0 = polytrack.custom(
        10,
        r_points=[[0.0, limit]],
        s_points=[[0.0, -limit]],
    )
    with pytest.raises(polytrack.SamplingError):
        polytrack.sample_initial_data(grid, r0, s0, (-1.0, 1.0))


def test_empty_domain(grid: polytrack.PressureGrid) -> None:
    r0, s0 = polytrack.two_rarefactions(10)
    with pytest.raises(polytrack.SamplingError):
        polytrack.sample_initial_data(grid, r0, s0, (1.0, -1.0))


def test_compute_J() -> None:  # noqa: N802
    r0, s0 = polytrack.custom(
        10,
        r_points=[[-1.0, 0.0], [1.0, 0.5]],
        s_points=[[-1.0, 0.0], [0.0, 0.8], [1.0, 0.0]],
    )
    assert np.isclose(
        polytrack.compute_J(r0, s0, (-2.0, 2.0), sample_count=4001),
        0.8,
    )

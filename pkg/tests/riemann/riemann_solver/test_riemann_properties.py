import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

import polytrack

steps = st.integers(min_value=-1, max_value=1)


def _jump_residual(
    grid: polytrack.PressureGrid,
    behind: polytrack.StandardState,
    ahead: polytrack.StandardState,
    slope: float,
) -> float:
    pressure = grid.get_params().pressure
    du = ahead.get_velocity() - behind.get_velocity()
    dp = pressure(grid.get_volume(ahead.get_j())) - pressure(
        grid.get_volume(behind.get_j())
    )
    return abs(slope * du - dp) / abs(dp)


@given(
    n=st.integers(min_value=10, max_value=80),
    i=st.integers(min_value=-8, max_value=8),
    j=st.integers(min_value=-8, max_value=8),
    m=steps,
    forward=steps,
)
@settings(max_examples=200, deadline=None)
def test_admissible_problems(  # noqa: PLR0913
    n: int,
    i: int,
    j: int,
    m: int,
    forward: int,
) -> None:
    grid = polytrack.build_grid(polytrack.GasParams(1.0, 2.0), n)
    left = polytrack.StandardState(n, i, j)
    right = left.shifted(m + forward, m - forward)
    fan = polytrack.solve_riemann(grid, left, right)

    assert fan.backward_strength == m
    assert fan.forward_strength == forward
    # l is exact across the backward jump, k across the forward one.
    assert fan.middle.get_doubled_l() == left.get_doubled_l()
    assert fan.middle.get_doubled_k() == right.get_doubled_k()

    if fan.backward_slope is not None:
        assert fan.backward_slope < 0
        assert _jump_residual(
            grid, left, fan.middle, fan.backward_slope
        ) <= 1e-10
        dv = grid.get_volume(fan.middle.get_j()) - grid.get_volume(j)
        du = fan.middle.get_velocity() - left.get_velocity()
        assert np.isclose(fan.backward_slope * dv, -du, rtol=1e-12)
    if fan.forward_slope is not None:
        assert fan.forward_slope > 0
        assert _jump_residual(
            grid, fan.middle, right, fan.forward_slope
        ) <= 1e-10
        dv = grid.get_volume(right.get_j()) - grid.get_volume(
            fan.middle.get_j()
        )
        du = right.get_velocity() - fan.middle.get_velocity()
        assert np.isclose(fan.forward_slope * dv, -du, rtol=1e-12)

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

import polytrack

pressure_coefficients = st.floats(min_value=0.5, max_value=2.0)
gammas = st.floats(
    min_value=1.01,
    max_value=2.99,
    allow_nan=False,
    allow_infinity=False,
)
resolutions = st.integers(min_value=10, max_value=160)


@given(
    pressure_coefficient=pressure_coefficients,
    gamma=gammas,
    n=resolutions,
)
@settings(max_examples=20, deadline=None)
def test_lattice_pairs(
    pressure_coefficient: float,
    gamma: float,
    n: int,
) -> None:
    params = polytrack.GasParams(pressure_coefficient, gamma)
    grid = polytrack.build_grid(params, n, -(n // 2), n // 2)
    j_min, j_max = grid.get_index_range()
    for k in range(j_min, j_max):
        assert grid.residual(k) <= 1e-10
    for k in range(j_min, j_max + 1):
        assert np.isclose(grid.phi(grid.get_volume(k)), k / n, atol=1e-12)
    assert np.all(np.diff(grid.get_volumes()) > 0)

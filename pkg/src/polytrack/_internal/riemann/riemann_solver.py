import logging

from polytrack._internal.grid.pressure_grid import PressureGrid
from polytrack._internal.grid.standard_state import StandardState
from polytrack._internal.riemann.wave_fan import WaveFan
from polytrack._internal.utilities.exceptions import IncompatibleStatesError

logger = logging.getLogger(__name__)


def backward_slope(grid: PressureGrid, j: int, strength: int) -> float:
    """Return the speed of a backward jump.

    Parameters:
        grid:
            The volume lattice.

        j:
            Volume index of the state left of the jump.

        strength:
            ``M``, either ``-1`` or ``+1``.

    Returns:
        ``-1 / (n |v_{j+M} - v_j|)``.

    """
    if strength not in (-1, 1):
        msg = f"backward strength must be -1 or +1, got {strength}"
        raise IncompatibleStatesError(msg)
    width = abs(grid.get_volume(j + strength) - grid.get_volume(j))
    return -1 / (grid.get_resolution() * width)


def forward_slope(grid: PressureGrid, j_mid: int, strength: int) -> float:
    """Return the speed of a forward jump.

    Parameters:
        grid:
            The volume lattice.

        j_mid:
            Volume index of the state left of the jump, which is the
            middle state of its fan.

        strength:
            ``N``, either ``-1`` or ``+1``.

    Returns:
        ``1 / (n |v_{j_mid} - v_{j_mid-N}|)``.

    """
    if strength not in (-1, 1):
        msg = f"forward strength must be -1 or +1, got {strength}"
        raise IncompatibleStatesError(msg)
    width = abs(grid.get_volume(j_mid) - grid.get_volume(j_mid - strength))
    return 1 / (grid.get_resolution() * width)


def solve_riemann(
    grid: PressureGrid,
    left: StandardState,
    right: StandardState,
) -> WaveFan:
    """Solve the Riemann problem between two standard states.

    The right state must be reachable with at most one lattice step per
    family, that is ``right = (i+M+N, j+M-N)`` with ``M, N`` in
    ``{-1, 0, 1}``. Across the backward jump the ``l`` index is constant
    and across the forward jump the ``k`` index is constant.

    Parameters:
        grid:
            The volume lattice.

        left:
            The state on the left.

        right:
            The state on the right.

    Returns:
        The wave fan.

    Raises:
        :class:`IncompatibleStatesError`: If no admissible ``(M, N)``
            connects the two states.

    Examples:
        .. code-block:: python

            import polytrack

            params = polytrack.GasParams(pressure_coefficient=1.0, gamma=2.0)
            grid = polytrack.build_grid(params, n=10, j_min=-3, j_max=3)
            fan = polytrack.solve_riemann(
                grid,
                polytrack.StandardState(10, 0, 0),
                polytrack.StandardState(10, 0, -2),
            )
            fan.middle  # StandardState(n=10, i=-1, j=-1)

    """
    if left.get_resolution() != right.get_resolution():
        msg = f"states on different lattices: {left}, {right}"
        raise IncompatibleStatesError(msg)
    doubled_m = right.get_doubled_k() - left.get_doubled_k()
    doubled_n = right.get_doubled_l() - left.get_doubled_l()
    # i+j and i-j change by 2M and 2N.
    if (
        doubled_m % 2
        or doubled_n % 2
        or abs(doubled_m) > 2  # noqa: PLR2004
        or abs(doubled_n) > 2  # noqa: PLR2004
    ):
        msg = f"no single-step wave fan connects {left} to {right}"
        raise IncompatibleStatesError(msg)
    m = doubled_m // 2
    n = doubled_n // 2
    middle = left.shifted(m, m)
    return WaveFan(
        left=left,
        middle=middle,
        right=right,
        backward_strength=m,
        forward_strength=n,
        backward_slope=(
            None if m == 0 else backward_slope(grid, left.get_j(), m)
        ),
        forward_slope=(
            None if n == 0 else forward_slope(grid, middle.get_j(), n)
        ),
    )

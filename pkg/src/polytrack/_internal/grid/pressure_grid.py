import bisect
import logging
from collections import abc
from typing import Any, Self

import numpy as np
from scipy.optimize import brentq

from polytrack._internal.grid.gas_params import GasParams
from polytrack._internal.utilities.exceptions import (
    GridConvergenceError,
    GridRangeError,
)

logger = logging.getLogger(__name__)

RESIDUAL_TOLERANCE = 1e-12
_MAX_BRACKET_STEPS = 2000
_POLISH_ULPS = 4


class PressureGrid:
    """The volume lattice of the polygonal pressure approximation.

    Consecutive volumes satisfy
    ``(p(v_k) - p(v_{k+1})) (v_{k+1} - v_k) = 1/n^2`` with ``v_0 = 1``,
    so that the discrete ``Phi`` takes the value ``k/n`` at ``v_k``.
    Volumes are computed lazily in both directions and memoised; a stored
    volume is never changed again.

    Parameters:
        params:
            The gas parameters.

        n:
            The resolution, a positive integer.

    Examples:
        .. code-block:: python

            import polytrack

            params = polytrack.GasParams(pressure_coefficient=1.0, gamma=2.0)
            grid = polytrack.build_grid(params, n=10, j_min=-5, j_max=5)
            grid.get_volume(1)  # 1.0746...
            grid.extend(12)
            grid.poly_pressure(1.5)

    """

    def __init__(self, params: GasParams, n: int) -> None:
        if n < 1:
            msg = f"resolution must be a positive integer, got {n}"
            raise GridRangeError(msg)
        self._params = params
        self._n = int(n)
        self._k_min = 0
        self._volumes = [1.0]

    @classmethod
    def init_from_volumes(
        cls,
        params: GasParams,
        n: int,
        k_min: int,
        volumes: abc.Sequence[float],
    ) -> Self:
        """Restore a grid from stored volumes.

        Parameters:
            params:
                The gas parameters.

            n:
                The resolution.

            k_min:
                Index of the first volume.

            volumes:
                Consecutive volumes starting at ``v_{k_min}``.

        Returns:
            The grid.

        Raises:
            :class:`GridRangeError`: If the stored range misses ``v_0 = 1``
                or a stored pair violates the residual certificate.

        """
        grid = cls(params, n)
        if not k_min <= 0 < k_min + len(volumes) or volumes[-k_min] != 1.0:
            msg = f"stored volumes from k = {k_min} do not contain v_0 = 1"
            raise GridRangeError(msg)
        grid._k_min = k_min  # noqa: SLF001
        grid._volumes = [float(volume) for volume in volumes]  # noqa: SLF001
        for k in range(k_min, k_min + len(volumes) - 1):
            if grid.residual(k) > RESIDUAL_TOLERANCE:
                msg = f"stored volumes violate the lattice relation at k = {k}"
                raise GridRangeError(msg)
        return grid

    def get_params(self) -> GasParams:
        return self._params

    def get_resolution(self) -> int:
        return self._n

    def get_index_range(self) -> tuple[int, int]:
        """Return the smallest and largest stored lattice index."""
        return self._k_min, self._k_min + len(self._volumes) - 1

    def get_volume(self, k: int) -> float:
        """Return ``v_k``, extending the lattice if needed."""
        self.extend(k)
        return self._volumes[k - self._k_min]

    def get_volumes(self) -> np.ndarray:
        """Return the stored volumes in increasing index order."""
        return np.array(self._volumes)

    def get_cell_width(self, k: int) -> float:
        """Return ``delta_k = v_{k+1} - v_k``."""
        return self.get_volume(k + 1) - self.get_volume(k)

    def residual(self, k: int) -> float:
        """Return ``|n^2 G(v_k, v_{k+1}) - 1|`` for the stored pair."""
        return self._residual(self.get_volume(k), self.get_volume(k + 1))

    def _residual(self, lower: float, upper: float) -> float:
        gap = float(
            self._params.pressure(lower) - self._params.pressure(upper)
        )
        return abs(self._n**2 * gap * (upper - lower) - 1)

    def _polish(
        self,
        lower: float,
        upper: float,
        *,
        move_upper: bool,
    ) -> float:
        # Rounding the root can cost a few ulps of residual.
        candidate = upper if move_upper else lower
        best = candidate
        best_residual = self._residual(lower, upper)
        for direction in (-np.inf, np.inf):
            trial = candidate
            for _ in range(_POLISH_ULPS):
                trial = float(np.nextafter(trial, direction))
                pair = (lower, trial) if move_upper else (trial, upper)
                trial_residual = self._residual(*pair)
                if trial_residual < best_residual:
                    best, best_residual = trial, trial_residual
        if best_residual > RESIDUAL_TOLERANCE:
            msg = (
                f"lattice residual {best_residual:.3e} exceeds "
                f"{RESIDUAL_TOLERANCE:.0e} near v = {candidate}"
            )
            raise GridConvergenceError(msg)
        return best

    def _solve_upward(self, volume: float) -> float:
        target = 1 / self._n**2
        pressure = self._params.pressure

        def gap(delta: float) -> float:
            return float(
                (pressure(volume) - pressure(volume + delta)) * delta - target
            )

        upper = volume
        for _ in range(_MAX_BRACKET_STEPS):
            if gap(upper) >= 0:
                break
            upper *= 2
        else:
            msg = f"could not bracket the lattice step above v = {volume}"
            raise GridConvergenceError(msg)

        delta = brentq(
            gap,
            0.0,
            upper,
            xtol=np.finfo(float).tiny,
            rtol=4 * np.finfo(float).eps,
            maxiter=500,
        )
        return self._polish(volume, volume + delta, move_upper=True)

    def _solve_downward(self, volume: float) -> float:
        target = 1 / self._n**2
        pressure = self._params.pressure

        def gap(delta: float) -> float:
            return float(
                (pressure(volume - delta) - pressure(volume)) * delta - target
            )

        upper = volume / 2
        for _ in range(_MAX_BRACKET_STEPS):
            if gap(upper) >= 0:
                break
            upper = (upper + volume) / 2
        else:
            msg = f"could not bracket the lattice step below v = {volume}"
            raise GridConvergenceError(msg)

        delta = brentq(
            gap,
            0.0,
            upper,
            xtol=np.finfo(float).tiny,
            rtol=4 * np.finfo(float).eps,
            maxiter=500,
        )
        return self._polish(volume - delta, volume, move_upper=False)

    def extend(self, k: int) -> Self:
        """Make sure ``v_k`` is stored.

        Stored entries are never modified, so extending to an index that
        is already present leaves the grid unchanged.

        Parameters:
            k:
                The lattice index to reach.

        Returns:
            The grid itself.

        """
        k_min, k_max = self.get_index_range()
        if k > k_max:
            for _ in range(k - k_max):
                self._volumes.append(self._solve_upward(self._volumes[-1]))
            msg = f"extended lattice up to k = {k}"
            logger.debug(msg)
        elif k < k_min:
            for _ in range(k_min - k):
                self._volumes.insert(0, self._solve_downward(self._volumes[0]))
                self._k_min -= 1
            msg = f"extended lattice down to k = {k}"
            logger.debug(msg)
        return self

    def locate(self, volume: float) -> int:
        """Return ``k`` with ``v_k <= volume <= v_{k+1}``.

        Raises:
            :class:`GridRangeError`: If `volume` lies outside the stored
                lattice.

        """
        if not self._volumes[0] <= volume <= self._volumes[-1]:
            msg = (
                f"volume {volume} outside the stored lattice "
                f"[{self._volumes[0]}, {self._volumes[-1]}], extend first"
            )
            raise GridRangeError(msg)
        position = bisect.bisect_right(self._volumes, volume) - 1
        position = min(position, len(self._volumes) - 2)
        return self._k_min + max(position, 0)

    def poly_pressure(self, volume: float) -> float:
        """Evaluate the polygonal pressure at `volume`.

        Parameters:
            volume:
                A volume inside the stored lattice.

        Returns:
            The linear interpolant of ``(v_k, p(v_k))``.

        """
        if len(self._volumes) == 1:
            if volume == self._volumes[0]:
                return float(self._params.pressure(volume))
            msg = f"volume {volume} outside the stored lattice, extend first"
            raise GridRangeError(msg)
        k = self.locate(volume)
        lower = self.get_volume(k)
        upper = self.get_volume(k + 1)
        if volume == lower:
            return float(self._params.pressure(lower))
        if volume == upper:
            return float(self._params.pressure(upper))
        p_lower = float(self._params.pressure(lower))
        p_upper = float(self._params.pressure(upper))
        weight = (volume - lower) / (upper - lower)
        return p_lower + weight * (p_upper - p_lower)

    def phi(self, volume: float) -> float:
        """Evaluate the discrete ``Phi`` at `volume`."""
        if len(self._volumes) == 1 and volume == self._volumes[0]:
            return 0.0
        k = self.locate(volume)
        lower = self.get_volume(k)
        return k / self._n + (volume - lower) / (
            self._n * self.get_cell_width(k)
        )

    def clone(self) -> Self:
        """Return a clone."""
        clone = self.__class__.__new__(self.__class__)
        clone._params = self._params  # noqa: SLF001
        clone._n = self._n  # noqa: SLF001
        clone._k_min = self._k_min  # noqa: SLF001
        clone._volumes = list(self._volumes)  # noqa: SLF001
        return clone

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready description of the grid."""
        k_min, k_max = self.get_index_range()
        return {
            "n": self._n,
            "K": self._params.get_pressure_coefficient(),
            "gamma": self._params.get_gamma(),
            "k_range": [k_min, k_max],
            "v": list(self._volumes),
        }

    def __str__(self) -> str:
        k_min, k_max = self.get_index_range()
        return (
            f"{self.__class__.__name__}(n={self._n}, {self._params}, "
            f"k_range=({k_min}, {k_max}))"
        )

    def __repr__(self) -> str:
        return str(self)


def build_grid(
    params: GasParams,
    n: int,
    j_min: int = 0,
    j_max: int = 0,
) -> PressureGrid:
    """Build the volume lattice on the index range ``[j_min, j_max]``.

    Parameters:
        params:
            The gas parameters.

        n:
            The resolution.

        j_min:
            Smallest index to compute, at most 0.

        j_max:
            Largest index to compute, at least 0.

    Returns:
        The grid.

    """
    if j_min > 0 or j_max < 0:
        msg = f"need j_min <= 0 <= j_max, got [{j_min}, {j_max}]"
        raise GridRangeError(msg)
    return PressureGrid(params, n).extend(j_min).extend(j_max)

import math

import numpy as np

from polytrack._internal.utilities.exceptions import (
    GasParamsError,
    SamplingError,
)


class GasParams:
    """Parameters of the pressure law ``p(v) = K v^(-gamma)``.

    Parameters:
        pressure_coefficient:
            The coefficient ``K`` (pressure times volume to the power
            gamma). Must be positive.

        gamma:
            The adiabatic exponent. Must be larger than 1. Simulation
            additionally requires ``gamma < 3``, see
            :meth:`check_simulation_range`.

    Examples:
        .. code-block:: python

            import polytrack

            params = polytrack.GasParams(pressure_coefficient=1.0, gamma=5/3)
            params.pressure(2.0)
            params.phi_limit()

    """

    def __init__(self, pressure_coefficient: float, gamma: float) -> None:
        if not pressure_coefficient > 0:
            msg = (
                "pressure coefficient must be positive, got "
                f"{pressure_coefficient}"
            )
            raise GasParamsError(msg)
        if not gamma > 1:
            msg = f"gamma must be larger than 1, got {gamma}"
            raise GasParamsError(msg)
        self._pressure_coefficient = float(pressure_coefficient)
        self._gamma = float(gamma)

    def get_pressure_coefficient(self) -> float:
        return self._pressure_coefficient

    def get_gamma(self) -> float:
        return self._gamma

    def check_simulation_range(self) -> None:
        """Raise :class:`GasParamsError` unless ``1 < gamma < 3``."""
        if not self._gamma < 3:  # noqa: PLR2004
            msg = (
                f"gamma = {self._gamma} violates 1 < gamma < 3, which "
                "the density bound for front tracking requires"
            )
            raise GasParamsError(msg)

    def pressure(self, volume: float | np.ndarray) -> float | np.ndarray:
        """Return ``K v^(-gamma)``."""
        return self._pressure_coefficient * np.power(volume, -self._gamma)

    def sound_speed(self, volume: float | np.ndarray) -> float | np.ndarray:
        """Return the Lagrangian sound speed ``sqrt(-p'(v))``."""
        return math.sqrt(self._pressure_coefficient * self._gamma) * np.power(
            volume, -(self._gamma + 1) / 2
        )

    def phi_limit(self) -> float:
        """Return the supremum of ``phi``; ``(r-s)/2`` at vacuum."""
        return (
            2
            * math.sqrt(self._pressure_coefficient * self._gamma)
            / (self._gamma - 1)
        )

    def phi(self, volume: float | np.ndarray) -> float | np.ndarray:
        """Return ``phi(v)``, the integral of the sound speed from 1 to v."""
        return self.phi_limit() * (
            1 - np.power(volume, (1 - self._gamma) / 2)
        )

    def volume_from_phi(self, phi: float | np.ndarray) -> float | np.ndarray:
        """Invert :meth:`phi`.

        Raises:
            :class:`SamplingError`: If any value reaches the vacuum
                threshold :meth:`phi_limit`.

        """
        ratio = 1 - np.asarray(phi, dtype=float) / self.phi_limit()
        if np.any(ratio <= 0):
            msg = "invariants reach vacuum, volume is unbounded"
            raise SamplingError(msg)
        result = np.power(ratio, 2 / (1 - self._gamma))
        if np.ndim(result) == 0:
            return float(result)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GasParams):
            return NotImplemented
        return (
            self._pressure_coefficient == other._pressure_coefficient
            and self._gamma == other._gamma
        )

    def __hash__(self) -> int:
        return hash((self._pressure_coefficient, self._gamma))

    def __str__(self) -> str:
        return (
            f"{self.__class__.__name__}(K={self._pressure_coefficient}, "
            f"gamma={self._gamma})"
        )

    def __repr__(self) -> str:
        return str(self)

import logging
import math
from collections import abc
from dataclasses import dataclass

import numpy as np

from polytrack._internal.exact.special import (
    hyp2f1_series,
    is_close_to_integer,
    legendre_polynomial,
)
from polytrack._internal.grid.gas_params import GasParams
from polytrack._internal.utilities.exceptions import (
    AdmissibleGammaError,
    InvariantDomainError,
)

logger = logging.getLogger(__name__)


def alpha(gamma: float) -> float:
    """Return ``(gamma + 1) / (2 (gamma - 1))``."""
    if not gamma > 1:
        msg = f"gamma must be larger than 1, got {gamma}"
        raise AdmissibleGammaError(msg)
    return (gamma + 1) / (2 * (gamma - 1))


@dataclass(frozen=True, slots=True)
class InteractionConfig:
    """Two symmetric centred rarefaction waves about to interact.

    The waves first meet at ``t_bar``. The invariants at the first
    meeting are ``S_bar > 0`` and ``R_bar = -S_bar``, so the velocity
    there vanishes.

    Attributes:
        t_bar:
            Time of the first interaction.

        S_bar:
            Invariant of the left state at the first interaction.

        params:
            The gas parameters.

    """

    t_bar: float
    S_bar: float  # noqa: N815
    params: GasParams

    def __post_init__(self) -> None:
        if not self.t_bar > 0:
            msg = f"t_bar must be positive, got {self.t_bar}"
            raise InvariantDomainError(msg)
        if not self.S_bar > 0:
            msg = f"S_bar must be positive, got {self.S_bar}"
            raise InvariantDomainError(msg)

    @property
    def R_bar(self) -> float:  # noqa: N802
        return -self.S_bar

    def get_alpha(self) -> float:
        return alpha(self.params.get_gamma())

    def is_outside_simulation_range(self) -> bool:
        """Return ``True`` for ``gamma >= 3``, where tracking is not run."""
        return self.params.get_gamma() >= 3  # noqa: PLR2004


def _check_pair(
    cfg: InteractionConfig,
    S: float,  # noqa: N803
    R: float,  # noqa: N803
) -> None:
    if not (0 < S <= cfg.S_bar and cfg.R_bar <= R < 0):
        msg = (
            f"invariants (S, R) = ({S}, {R}) outside 0 < S <= {cfg.S_bar}, "
            f"{cfg.R_bar} <= R < 0"
        )
        raise InvariantDomainError(msg)


def _prefactor(
    cfg: InteractionConfig,
    S: float,  # noqa: N803
    R: float,  # noqa: N803
) -> float:
    return cfg.t_bar * ((cfg.S_bar - cfg.R_bar) / (S - R)) ** cfg.get_alpha()


def hypergeometric_argument(
    cfg: InteractionConfig,
    S: float,  # noqa: N803
    R: float,  # noqa: N803
) -> float:
    """Return ``z = (S_bar-S)(R_bar-R) / ((S_bar-R_bar)(S-R))``, ``z <= 0``."""
    _check_pair(cfg, S, R)
    return ((cfg.S_bar - S) * (cfg.R_bar - R)) / (
        (cfg.S_bar - cfg.R_bar) * (S - R)
    )


def t_interaction_hyper(
    cfg: InteractionConfig,
    S: float,  # noqa: N803
    R: float,  # noqa: N803
) -> float:
    """Return the time at which the invariant pair ``(S, R)`` is reached.

    .. math::

        t = \\bar t \\left(\\frac{\\bar S - \\bar R}{S - R}\\right)^\\alpha
        F(1 - \\alpha, \\alpha; 1; z)

    Parameters:
        cfg:
            The interaction.

        S:
            Invariant carried from the left, ``0 < S <= S_bar``.

        R:
            Invariant carried from the right, ``R_bar <= R < 0``.

    Returns:
        The time.

    Raises:
        :class:`InvariantDomainError`: If ``(S, R)`` is outside the
            interaction region.

    Examples:
        .. code-block:: python

            import polytrack

            cfg = polytrack.exact.InteractionConfig(
                t_bar=1.0,
                S_bar=1.0,
                params=polytrack.GasParams(1.0, 5 / 3),
            )
            polytrack.exact.t_interaction_hyper(cfg, 0.5, -0.5)  # 5.0

    """
    z = hypergeometric_argument(cfg, S, R)
    exponent = cfg.get_alpha()
    return _prefactor(cfg, S, R) * hyp2f1_series(
        1 - exponent, exponent, 1, z
    )


def t_interaction_legendre(
    cfg: InteractionConfig,
    S: float,  # noqa: N803
    R: float,  # noqa: N803
    N: int | None = None,  # noqa: N803
) -> float:
    """Return the interaction time through a Legendre polynomial.

    Valid for ``gamma = (2N + 1)/(2N - 1)``, where the exponent is the
    integer ``N`` and the hypergeometric factor equals
    ``P_{N-1}((S_bar^2 - S R) / (S_bar (S - R)))``.

    Parameters:
        cfg:
            The interaction.

        S:
            Invariant carried from the left.

        R:
            Invariant carried from the right.

        N:
            The integer exponent; derived from gamma when omitted.

    Returns:
        The time.

    Raises:
        :class:`AdmissibleGammaError`: If gamma is not of the form
            ``(2N + 1)/(2N - 1)``, or does not match `N`.

    """
    exponent = cfg.get_alpha()
    if not is_close_to_integer(exponent):
        msg = (
            f"gamma = {cfg.params.get_gamma()} is not (2N+1)/(2N-1) for "
            "an integer N"
        )
        raise AdmissibleGammaError(msg)
    if N is not None and round(exponent) != N:
        msg = f"gamma = {cfg.params.get_gamma()} does not match N = {N}"
        raise AdmissibleGammaError(msg)
    _check_pair(cfg, S, R)
    argument = (cfg.S_bar**2 - S * R) / (cfg.S_bar * (S - R))
    return _prefactor(cfg, S, R) * legendre_polynomial(
        round(exponent) - 1, argument
    )


def volume_from_invariants(
    params: GasParams,
    S: float,  # noqa: N803
    R: float,  # noqa: N803
) -> tuple[float, float]:
    """Return ``(v, rho)`` for the invariant pair ``(S, R)``.

    Inverts ``S - R = (4 sqrt(K) / (gamma - 1)) v^((1 - gamma)/2)``.

    Raises:
        :class:`InvariantDomainError`: If ``S <= R``.

    """
    if not S > R:
        msg = f"need S > R, got ({S}, {R})"
        raise InvariantDomainError(msg)
    gamma = params.get_gamma()
    root_k = math.sqrt(params.get_pressure_coefficient())
    volume = ((gamma - 1) * (S - R) / (4 * root_k)) ** (2 / (1 - gamma))
    return volume, 1 / volume


def default_decay_samples(count: int = 31) -> np.ndarray:
    """Return ``S = -R`` values spread over ``[1e-4, 1e-1]``."""
    return np.logspace(-1, -4, count)


def decay_curve(
    cfg: InteractionConfig,
    samples: abc.Iterable[float],
) -> list[tuple[float, float]]:
    """Return ``(t, rho)`` along the symmetric line ``S = -R``.

    Parameters:
        cfg:
            The interaction.

        samples:
            Values of ``S``, each in ``(0, S_bar]``.

    Returns:
        The interaction time and the density at the centre for each
        sample.

    """
    if cfg.is_outside_simulation_range():
        msg = (
            f"gamma = {cfg.params.get_gamma()} is outside 1 < gamma < 3; "
            "the closed form holds but front tracking does not apply"
        )
        logger.warning(msg)
    curve = []
    for value in samples:
        time = t_interaction_hyper(cfg, float(value), -float(value))
        _, density = volume_from_invariants(
            cfg.params, float(value), -float(value)
        )
        curve.append((time, density))
    return curve

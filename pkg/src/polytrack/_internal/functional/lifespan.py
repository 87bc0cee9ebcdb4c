import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy.integrate import solve_ivp

from polytrack._internal.grid.gas_params import GasParams
from polytrack._internal.types import InvariantProfile
from polytrack._internal.utilities.exceptions import LifespanError

logger = logging.getLogger(__name__)

BLOWUP_FACTOR = 1e6
BOUND_SLACK = 1.05


def lifespan_bound(
    G0: float,  # noqa: N803
    H0: float,  # noqa: N803
    L: float,  # noqa: N803
    K0: float,  # noqa: N803
    gamma: float,
) -> float:
    """Return the time by which compressive data must lose smoothness.

    .. math::

        \\frac{1}{L}\\left[\\left(-\\frac{4 K_0}{(\\gamma+1) G_0}
        + H_0^{(\\gamma+1)/4}\\right)^{4/(\\gamma+1)} - H_0\\right]

    Parameters:
        G0:
            Most negative scaled initial gradient, ``G0 < 0``.

        H0:
            Largest initial specific volume.

        L:
            Growth rate of the specific volume.

        K0:
            Coefficient of the characteristic Riccati equation.

        gamma:
            The adiabatic exponent.

    Returns:
        The bound on the life span.

    Raises:
        :class:`LifespanError`: If `G0` is not negative or another
            argument is not positive.

    """
    if not G0 < 0:
        msg = (
            f"G0 = {G0} is not negative: the data are nowhere compressive "
            "and no blow-up is predicted"
        )
        raise LifespanError(msg)
    if not (H0 > 0 and L > 0 and K0 > 0):
        msg = f"need H0, L, K0 > 0, got {H0}, {L}, {K0}"
        raise LifespanError(msg)
    exponent = (gamma + 1) / 4
    inner = -4 * K0 / ((gamma + 1) * G0) + H0**exponent
    return (inner ** (1 / exponent) - H0) / L


def riccati_coefficient(params: GasParams) -> float:
    """Return ``K0 = ((gamma+1)/4) (K gamma)^(-1/4)``.

    With ``y = sqrt(c) s_x`` in a simple wave,
    ``dy/dt = -K0 v^((gamma-3)/4) y^2`` along characteristics.

    """
    gamma = params.get_gamma()
    kappa = params.get_pressure_coefficient() * gamma
    return (gamma + 1) / 4 * kappa ** (-1 / 4)


def _scaled_gradients(  # noqa: PLR0913
    params: GasParams,
    r0: InvariantProfile,
    s0: InvariantProfile,
    v0: InvariantProfile | None,
    domain: tuple[float, float],
    sample_count: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Return ``min(sqrt(c) s0', sqrt(c) r0')`` and ``v`` per sample."""
    xs = np.linspace(domain[0], domain[1], sample_count)
    r_values = np.asarray(r0(xs), dtype=float)
    s_values = np.asarray(s0(xs), dtype=float)
    if v0 is None:
        volumes = np.asarray(
            params.volume_from_phi((r_values - s_values) / 2), dtype=float
        )
    else:
        volumes = np.asarray(v0(xs), dtype=float)
    root_c = np.sqrt(params.sound_speed(volumes))
    gradients = np.minimum(
        root_c * np.gradient(s_values, xs),
        root_c * np.gradient(r_values, xs),
    )
    return gradients, volumes


def initial_gradient_fields(  # noqa: PLR0913
    params: GasParams,
    r0: InvariantProfile,
    s0: InvariantProfile,
    v0: InvariantProfile | None,
    domain: tuple[float, float],
    sample_count: int = 20001,
) -> tuple[float, float]:
    """Return ``(G0, H0)`` of the initial data.

    Parameters:
        params:
            The gas parameters.

        r0:
            Vectorised initial ``r``.

        s0:
            Vectorised initial ``s``.

        v0:
            Vectorised initial volume, derived from `r0` and `s0` when
            ``None``.

        domain:
            Sampled interval.

        sample_count:
            Number of sample points.

    Returns:
        ``G0``, the minimum of ``sqrt(c) s0'`` and ``sqrt(c) r0'``, and
        ``H0``, the largest volume.

    """
    gradients, volumes = _scaled_gradients(
        params, r0, s0, v0, domain, sample_count
    )
    return float(np.min(gradients)), float(np.max(volumes))


def exact_blowup_time(
    params: GasParams,
    K0: float,  # noqa: N803
    y0: float,
    volume: float,
) -> float:
    """Return when ``dy/dt = -K0 v^((gamma-3)/4) y^2`` blows up from `y0`.

    Returns:
        ``1 / (K0 v^((gamma-3)/4) |y0|)``, infinite unless ``y0 < 0``.

    """
    if not y0 < 0:
        return math.inf
    rate = K0 * volume ** ((params.get_gamma() - 3) / 4)
    return 1 / (rate * abs(y0))


@dataclass(frozen=True, slots=True)
class CharacteristicBlowup:
    """Blow-up time of the Riccati equation along one characteristic."""

    time: float
    converged: bool
    refinements: int


def characteristic_blowup(  # noqa: PLR0913
    params: GasParams,
    K0: float,  # noqa: N803
    y0: float,
    volume: float,
    horizon: float,
    rtol: float = 1e-3,
    max_refinements: int = 8,
) -> CharacteristicBlowup:
    """Integrate the characteristic Riccati equation until blow-up.

    Integration stops once ``|y|`` exceeds ``1e6 |y0|``. The maximal
    step is halved until two successive blow-up times agree to `rtol`.

    Parameters:
        params:
            The gas parameters.

        K0:
            The Riccati coefficient.

        y0:
            Initial ``sqrt(c)`` times the gradient, negative.

        volume:
            Specific volume along the characteristic.

        horizon:
            Integration stops at this time without a blow-up.

        rtol:
            Relative agreement required between refinements.

        max_refinements:
            Largest number of step halvings.

    Returns:
        The blow-up time, infinite when none occurs before `horizon`.

    """
    rate = K0 * volume ** ((params.get_gamma() - 3) / 4)
    threshold = BLOWUP_FACTOR * abs(y0)

    def rhs(_: float, y: np.ndarray) -> np.ndarray:
        return -rate * y**2

    def escaped(_: float, y: np.ndarray) -> float:
        return float(threshold - abs(y[0]))

    escaped.terminal = True  # type: ignore[attr-defined]

    previous = math.inf
    max_step = horizon / 16
    for refinement in range(max_refinements):
        solution = solve_ivp(
            rhs,
            (0.0, horizon),
            [y0],
            method="RK45",
            rtol=1e-10,
            atol=1e-12,
            max_step=max_step,
            events=escaped,
        )
        time = (
            float(solution.t_events[0][0])
            if len(solution.t_events[0])
            else math.inf
        )
        if math.isinf(time) and math.isinf(previous):
            return CharacteristicBlowup(math.inf, True, refinement)
        if abs(time - previous) <= rtol * time:
            return CharacteristicBlowup(time, True, refinement)
        previous = time
        max_step /= 2
    msg = f"blow-up time did not settle after {max_refinements} halvings"
    logger.warning(msg)
    return CharacteristicBlowup(previous, False, max_refinements)


@dataclass(frozen=True, slots=True)
class LifespanDiagnostic:
    """The life-span bound next to the blow-up it bounds.

    ``bound_respected`` holds when the integrated blow-up happens no
    later than ``1.05`` times the bound; it is ``None`` when either is
    unavailable.

    """

    G0: float
    H0: float
    K0: float
    L: float
    bound: float | None
    ode_blowup: float | None
    exact_blowup: float | None
    converged: bool
    collision_time: float | None
    bound_respected: bool | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "G0": self.G0,
            "H0": self.H0,
            "K0": self.K0,
            "L": self.L,
            "bound": self.bound,
            "ode_blowup": self.ode_blowup,
            "exact_blowup": self.exact_blowup,
            "converged": self.converged,
            "collision_time": self.collision_time,
            "bound_respected": self.bound_respected,
        }


def lifespan_diagnostic(  # noqa: PLR0913
    params: GasParams,
    r0: InvariantProfile,
    s0: InvariantProfile,
    domain: tuple[float, float],
    K0: float | None = None,  # noqa: N803
    L: float = 1.0,  # noqa: N803
    collision_time: float | None = None,
    sample_count: int = 20001,
) -> LifespanDiagnostic:
    """Compare the life-span bound with the characteristic blow-up.

    The Riccati equation is integrated along the characteristic with
    the earliest exact blow-up.

    Parameters:
        params:
            The gas parameters.

        r0:
            Vectorised initial ``r``.

        s0:
            Vectorised initial ``s``.

        domain:
            Sampled interval.

        K0:
            The Riccati coefficient, :func:`riccati_coefficient` when
            omitted.

        L:
            Growth rate of the specific volume.

        collision_time:
            Time of the simulated same-family collision, if any.

        sample_count:
            Number of sample points.

    Returns:
        The diagnostic.

    """
    if K0 is None:
        K0 = riccati_coefficient(params)  # noqa: N806
    gradients, volumes = _scaled_gradients(
        params, r0, s0, None, domain, sample_count
    )
    G0 = float(np.min(gradients))  # noqa: N806
    H0 = float(np.max(volumes))  # noqa: N806
    if not G0 < 0:
        return LifespanDiagnostic(
            G0, H0, K0, L, None, None, None, True, collision_time, None
        )

    times = [
        exact_blowup_time(params, K0, float(y0), float(v))
        for y0, v in zip(gradients, volumes, strict=True)
    ]
    earliest = int(np.argmin(times))
    exact = times[earliest]
    integrated = characteristic_blowup(
        params,
        K0,
        float(gradients[earliest]),
        float(volumes[earliest]),
        horizon=4 * exact,
    )
    bound = lifespan_bound(G0, H0, L, K0, params.get_gamma())
    msg = (
        f"life span: bound {bound}, integrated blow-up "
        f"{integrated.time}, exact blow-up {exact}"
    )
    logger.info(msg)
    return LifespanDiagnostic(
        G0=G0,
        H0=H0,
        K0=K0,
        L=L,
        bound=bound,
        ode_blowup=integrated.time,
        exact_blowup=exact,
        converged=integrated.converged,
        collision_time=collision_time,
        bound_respected=integrated.time <= BOUND_SLACK * bound,
    )

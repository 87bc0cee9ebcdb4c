import bisect
import logging
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy.optimize import brentq

from polytrack._internal.grid.pressure_grid import PressureGrid
from polytrack._internal.grid.standard_state import StandardState
from polytrack._internal.types import InvariantProfile
from polytrack._internal.utilities.exceptions import SamplingError

logger = logging.getLogger(__name__)

SAMPLE_COUNT = 20001
MERGE_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True)
class InitialProfile:
    """Piecewise-constant initial data on standard states.

    ``states[q]`` holds on the cell left of ``breakpoints[q]`` (and right
    of ``breakpoints[q-1]``), so there is one more state than there are
    breakpoints. The first and last states extend to minus and plus
    infinity.

    """

    domain: tuple[float, float]
    breakpoints: tuple[float, ...]
    states: tuple[StandardState, ...]

    def state_at(self, position: float) -> StandardState:
        """Return the state at `position`, right-continuous."""
        return self.states[bisect.bisect_right(self.breakpoints, position)]

    def get_index_range(self) -> tuple[int, int]:
        """Return the smallest and largest volume index used."""
        indices = [state.get_j() for state in self.states]
        return min(indices), max(indices)

    def to_dict(self) -> dict[str, Any]:
        return {
            "domain": list(self.domain),
            "breakpoints": list(self.breakpoints),
            "states": [[s.get_i(), s.get_j()] for s in self.states],
        }


def _evaluate(profile: InvariantProfile, position: float) -> float:
    return float(np.asarray(profile(np.array([position])))[0])


def _level_crossings(
    profile: InvariantProfile,
    xs: np.ndarray,
    values: np.ndarray,
    n: int,
) -> list[tuple[float, int]]:
    """Locate where ``round(n value / 2)`` changes.

    Returns:
        ``(x, +-1)`` for every unit change of the level index.

    """
    levels = np.floor(n * values / 2 + 0.5).astype(int)
    crossings = []
    for position in np.flatnonzero(np.diff(levels)):
        lower, upper = levels[position], levels[position + 1]
        step = 1 if upper > lower else -1
        a, b = xs[position], xs[position + 1]
        # Level m turns into m + 1 at value (2m + 1)/n.
        for level in range(min(lower, upper), max(lower, upper)):
            target = (2 * level + 1) / n

            def offset(x: float, target: float = target) -> float:
                return _evaluate(profile, x) - target

            crossing = brentq(offset, a, b, xtol=1e-14)
            crossings.append((float(crossing), step))
    return sorted(crossings)


def sample_initial_data(  # noqa: PLR0913
    grid: PressureGrid,
    r0: InvariantProfile,
    s0: InvariantProfile,
    domain: tuple[float, float],
    constants_outside: tuple[StandardState, StandardState] | None = None,
    sample_count: int = SAMPLE_COUNT,
) -> InitialProfile:
    """Project initial Riemann invariants onto standard states.

    Each invariant is rounded to the lattice, ``k = round(n r/2)`` and
    ``l = round(n s/2)``, and the cells are cut where either index
    changes. Adjacent cells then differ by at most one step per family.
    Crossings of ``r`` and ``s`` at the same position are merged into a
    single breakpoint.

    Parameters:
        grid:
            The volume lattice, extended as needed.

        r0:
            Vectorised initial ``r = u + Phi``.

        s0:
            Vectorised initial ``s = u - Phi``.

        domain:
            The interval ``(x_min, x_max)`` outside of which the data are
            constant.

        constants_outside:
            Optional expected states left of `x_min` and right of
            `x_max`.

        sample_count:
            Number of points used to locate the level crossings.

    Returns:
        The piecewise-constant profile.

    Raises:
        :class:`SamplingError`: If the data reach vacuum or disagree with
            `constants_outside`.

    """
    x_min, x_max = domain
    if not x_min < x_max:
        msg = f"empty domain {domain}"
        raise SamplingError(msg)
    n = grid.get_resolution()
    xs = np.linspace(x_min, x_max, sample_count)
    r_values = np.asarray(r0(xs), dtype=float)
    s_values = np.asarray(s0(xs), dtype=float)

    phi_limit = grid.get_params().phi_limit()
    if np.any((r_values - s_values) / 2 >= phi_limit):
        msg = (
            "initial data reach vacuum: (r - s)/2 must stay below "
            f"{phi_limit}"
        )
        raise SamplingError(msg)

    crossings = [
        (x, step, 0) for x, step in _level_crossings(r0, xs, r_values, n)
    ]
    crossings += [
        (x, 0, step) for x, step in _level_crossings(s0, xs, s_values, n)
    ]
    crossings.sort(key=lambda item: item[0])

    breakpoints: list[float] = []
    jumps: list[list[int]] = []
    for x, dk, dl in crossings:
        if (
            breakpoints
            and x - breakpoints[-1] <= MERGE_TOLERANCE
            and (dk == 0 or jumps[-1][0] == 0)
            and (dl == 0 or jumps[-1][1] == 0)
        ):
            jumps[-1][0] += dk
            jumps[-1][1] += dl
            continue
        breakpoints.append(x)
        jumps.append([dk, dl])

    k = int(np.floor(n * r_values[0] / 2 + 0.5))
    l = int(np.floor(n * s_values[0] / 2 + 0.5))  # noqa: E741
    states = [StandardState(n, k + l, k - l)]
    for dk, dl in jumps:
        k += dk
        l += dl  # noqa: E741
        states.append(StandardState(n, k + l, k - l))

    if constants_outside is not None:
        left, right = constants_outside
        if left != states[0] or right != states[-1]:
            msg = (
                f"constant states {left}, {right} disagree with the "
                f"sampled end states {states[0]}, {states[-1]}"
            )
            raise SamplingError(msg)

    profile = InitialProfile(
        domain=(float(x_min), float(x_max)),
        breakpoints=tuple(breakpoints),
        states=tuple(states),
    )
    j_low, j_high = profile.get_index_range()
    grid.extend(j_low - 1).extend(j_high + 1)
    msg = (
        f"sampled {len(states)} cells with {len(breakpoints)} breakpoints "
        f"at n = {n}"
    )
    logger.info(msg)
    return profile


def compute_J(  # noqa: N802
    r0: InvariantProfile,
    s0: InvariantProfile,
    domain: tuple[float, float],
    sample_count: int = SAMPLE_COUNT,
) -> float:
    """Return the one-sided Lipschitz constant of the initial data.

    Parameters:
        r0:
            Vectorised initial ``r``.

        s0:
            Vectorised initial ``s``.

        domain:
            The sampled interval.

        sample_count:
            Number of sample points.

    Returns:
        The largest forward difference quotient of ``r0`` and ``s0``.

    """
    xs = np.linspace(domain[0], domain[1], sample_count)
    spacing = np.diff(xs)
    quotients = [
        np.diff(np.asarray(profile(xs), dtype=float)) / spacing
        for profile in (r0, s0)
    ]
    return float(max(np.max(quotient) for quotient in quotients))
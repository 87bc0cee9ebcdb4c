import logging
import math
from collections import abc
from typing import Any

import numpy as np

from polytrack._internal.types import Family, InvariantProfile
from polytrack._internal.utilities.exceptions import ConfigError

logger = logging.getLogger(__name__)


def quantize_amplitude(amplitude: float, n: int) -> float:
    """Round `amplitude` to a positive even number of lattice steps.

    Parameters:
        amplitude:
            The requested jump of a Riemann invariant.

        n:
            The resolution.

    Returns:
        ``2 max(1, round(n amplitude / 2)) / n``, so that the jump is
        crossed by at least one front.

    """
    return 2 * max(1, round(n * amplitude / 2)) / n


def _ramp(
    start: float,
    end: float,
    low: float,
    high: float,
) -> InvariantProfile:
    def profile(x: np.ndarray) -> np.ndarray:
        return np.interp(np.asarray(x, dtype=float), [start, end], [low, high])

    return profile


def _zero(x: np.ndarray) -> np.ndarray:
    return np.zeros_like(np.asarray(x, dtype=float))


def two_rarefactions(
    n: int,
    strength: float = 0.2,
    width: float = 0.5,
    gap: float = 0.5,
) -> tuple[InvariantProfile, InvariantProfile]:
    """Two rarefaction waves running into each other.

    ``s`` rises on the left ramp and ``r`` on the right ramp by the same
    quantized amplitude. The forward fan on the left and the backward
    fan on the right cross, and the volume between them grows.

    Parameters:
        n:
            The resolution.

        strength:
            Requested rise of each invariant.

        width:
            Width of each ramp.

        gap:
            Distance between the ramps.

    Returns:
        ``(r0, s0)``.

    """
    amplitude = quantize_amplitude(strength, n)
    half = gap / 2
    r0 = _ramp(half, half + width, 0.0, amplitude)
    s0 = _ramp(-half - width, -half, 0.0, amplitude)
    return r0, s0


def compression_pair(
    n: int,
    steps: int = 2,
    width: float = 0.5,
    center: float = 0.0,
) -> tuple[InvariantProfile, InvariantProfile]:
    """A compressive ramp of ``r`` that steepens into a collision.

    The ramp emits `steps` compressive backward fronts. Each one moves
    left faster than its left neighbour and catches up with it.

    """
    amplitude = 2 * steps / n
    r0 = _ramp(center - width / 2, center + width / 2, amplitude, 0.0)
    return r0, _zero


def simple_wave(  # noqa: PLR0913
    n: int,
    direction: str = "forward",
    amplitude: float = 0.2,
    width: float = 1.0,
    compressive: bool = True,
    center: float = 0.0,
) -> tuple[InvariantProfile, InvariantProfile]:
    """A simple wave of one family, the other invariant held at zero.

    A forward wave varies ``s`` and a backward wave varies ``r``. The
    varying invariant falls across the ramp when `compressive` and
    rises otherwise.

    Parameters:
        n:
            The resolution.

        direction:
            ``"forward"`` or ``"backward"``.

        amplitude:
            Requested change of the varying invariant.

        width:
            Width of the ramp.

        compressive:
            Whether the wave steepens.

        center:
            Midpoint of the ramp.

    Returns:
        ``(r0, s0)``.

    """
    height = quantize_amplitude(amplitude, n)
    low, high = (height, 0.0) if compressive else (0.0, height)
    varying = _ramp(center - width / 2, center + width / 2, low, high)
    if Family(direction) is Family.FORWARD:
        return _zero, varying
    return varying, _zero


def _piecewise_linear(
    points: abc.Sequence[abc.Sequence[float]],
) -> InvariantProfile:
    xs = [float(point[0]) for point in points]
    values = [float(point[1]) for point in points]

    def profile(x: np.ndarray) -> np.ndarray:
        return np.interp(np.asarray(x, dtype=float), xs, values)

    return profile


def custom(
    n: int,  # noqa: ARG001
    r_points: abc.Sequence[abc.Sequence[float]],
    s_points: abc.Sequence[abc.Sequence[float]],
) -> tuple[InvariantProfile, InvariantProfile]:
    """Piecewise-linear ``r0`` and ``s0`` through ``[x, value]`` points.

    Both are constant beyond their first and last points.

    """
    return _piecewise_linear(r_points), _piecewise_linear(s_points)


PRESETS: dict[str, dict[str, Any]] = {
    "two_rarefactions": {
        "builder": two_rarefactions,
        "defaults": {"strength": 0.2, "width": 0.5, "gap": 0.5},
    },
    "compression_pair": {
        "builder": compression_pair,
        "defaults": {"steps": 2, "width": 0.5, "center": 0.0},
    },
    "simple_wave": {
        "builder": simple_wave,
        "defaults": {
            "direction": "forward",
            "amplitude": 0.2,
            "width": 1.0,
            "compressive": True,
            "center": 0.0,
        },
    },
    "custom": {
        "builder": custom,
        "defaults": {"r_points": [[0.0, 0.0]], "s_points": [[0.0, 0.0]]},
    },
}
"""Named initial data, their builders and default parameters."""


def _check_number(value: Any, path: str) -> float:  # noqa: ANN401
    if isinstance(value, bool) or not isinstance(value, int | float):
        msg = f"{path}: expected a number, got {value!r}"
        raise ConfigError(msg)
    if not math.isfinite(value):
        msg = f"{path}: expected a finite number, got {value!r}"
        raise ConfigError(msg)
    return float(value)


def _check_points(value: Any, path: str) -> list[list[float]]:  # noqa: ANN401
    if not isinstance(value, list) or not value:
        msg = f"{path}: expected a non-empty list of [x, value] pairs"
        raise ConfigError(msg)
    points = []
    for position, point in enumerate(value):
        if not isinstance(point, list) or len(point) != 2:  # noqa: PLR2004
            msg = f"{path}.{position}: expected an [x, value] pair"
            raise ConfigError(msg)
        points.append(
            [
                _check_number(point[0], f"{path}.{position}.0"),
                _check_number(point[1], f"{path}.{position}.1"),
            ]
        )
    xs = [point[0] for point in points]
    if any(b <= a for a, b in zip(xs, xs[1:], strict=False)):
        msg = f"{path}: x values must be strictly increasing"
        raise ConfigError(msg)
    return points


def validate_preset(
    value: Any,  # noqa: ANN401
    path: str = "preset",
) -> dict[str, Any]:
    """Validate a preset entry and fill in its defaults.

    Parameters:
        value:
            A preset name, or a mapping with a ``name`` key and optional
            parameters.

        path:
            Dotted path of `value`, used in error messages.

    Returns:
        The preset as ``{"name": ..., **parameters}``.

    Raises:
        :class:`ConfigError`: If the name or a parameter is invalid.

    """
    if isinstance(value, str):
        value = {"name": value}
    if not isinstance(value, dict) or "name" not in value:
        msg = f"{path}: expected a preset name or a mapping with a name"
        raise ConfigError(msg)
    name = value["name"]
    if name not in PRESETS:
        msg = (
            f"{path}.name: unknown preset {name!r}, choose from "
            f"{', '.join(PRESETS)}"
        )
        raise ConfigError(msg)
    defaults = PRESETS[name]["defaults"]
    spec: dict[str, Any] = {"name": name}
    for key in value:
        if key != "name" and key not in defaults:
            msg = f"{path}.{key}: unknown parameter of {name}"
            raise ConfigError(msg)
    for key, default in defaults.items():
        item = value.get(key, default)
        field_path = f"{path}.{key}"
        if key in ("r_points", "s_points"):
            if key not in value:
                msg = f"{field_path}: missing required field"
                raise ConfigError(msg)
            spec[key] = _check_points(item, field_path)
        elif key == "direction":
            if item not in tuple(Family):
                msg = f"{field_path}: expected 'forward' or 'backward'"
                raise ConfigError(msg)
            spec[key] = item
        elif key == "compressive":
            if not isinstance(item, bool):
                msg = f"{field_path}: expected true or false"
                raise ConfigError(msg)
            spec[key] = item
        elif key == "steps":
            if isinstance(item, bool) or not isinstance(item, int):
                msg = f"{field_path}: expected an integer"
                raise ConfigError(msg)
            if item < 2:  # noqa: PLR2004
                msg = f"{field_path}: need at least 2 fronts to collide"
                raise ConfigError(msg)
            spec[key] = item
        else:
            spec[key] = _check_number(item, field_path)
            if key in ("strength", "amplitude", "width") and spec[key] <= 0:
                msg = f"{field_path}: must be positive"
                raise ConfigError(msg)
            if key == "gap" and spec[key] < 0:
                msg = f"{field_path}: must not be negative"
                raise ConfigError(msg)
    return spec


def build_preset(
    spec: dict[str, Any],
    n: int,
) -> tuple[InvariantProfile, InvariantProfile]:
    """Build ``(r0, s0)`` for a validated preset at resolution `n`.

    Examples:
        .. code-block:: python

            import numpy as np
            import polytrack

            r0, s0 = polytrack.build_preset(
                {"name": "two_rarefactions", "strength": 0.2},
                n=20,
            )
            r0(np.linspace(-2, 2, 5))

    """
    spec = validate_preset(spec)
    parameters = {key: item for key, item in spec.items() if key != "name"}
    msg = f"building preset {spec['name']} at n = {n} with {parameters}"
    logger.debug(msg)
    return PRESETS[spec["name"]]["builder"](n, **parameters)

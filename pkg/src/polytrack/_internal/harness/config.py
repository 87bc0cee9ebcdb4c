import copy
import enum
import json
import logging
import math
import os
from collections import abc
from pathlib import Path
from typing import Any

from polytrack._internal.grid.gas_params import GasParams
from polytrack._internal.harness.presets import validate_preset
from polytrack._internal.utilities.exceptions import (
    ConfigError,
    GasParamsError,
)

logger = logging.getLogger(__name__)

OUTPUT_DIR_VARIABLE = "POLYTRACK_OUTPUT_DIR"
MIN_RESOLUTION = 4

OUTPUTS = (
    "trace_json",
    "fronts_csv",
    "events_jsonl",
    "a_of_t_csv",
    "bound_report_json",
    "districts_json",
    "svg_diagram",
    "decay_csv",
    "lifespan_json",
)
"""Every artifact the harness can write."""

CHECKS = (
    "diamond_preservation",
    "diamond_inequalities",
    "district_decay",
    "a_monotone",
    "density_bound",
    "tracing",
)
"""Every lemma checker the harness can run."""

DEFAULTS: dict[str, Any] = {
    "domain": [-2.0, 2.0],
    "sample_times": [],
    "outputs": list(OUTPUTS),
    "checks": dict.fromkeys(CHECKS, True),
    "K0": None,
    "lifespan_rate": 1.0,
    "exact": {"t_bar": 1.0, "S_bar": 1.0, "samples": None},
    "output_dir": "polytrack_output",
}
"""Default of every optional configuration key."""


class RunMode(enum.StrEnum):
    """What a configuration is loaded for."""

    RUN = "run"
    EXACT = "exact"


class RunConfig:
    """A validated run configuration.

    Use :func:`load_config` to read one from a JSON file, or
    :meth:`init_from_dict` for an already parsed mapping.

    Parameters:
        values:
            The validated configuration, with defaults applied.

        mode:
            What the configuration was validated for.

    """

    def __init__(self, values: dict[str, Any], mode: RunMode) -> None:
        self._values = values
        self._mode = mode

    @classmethod
    def init_from_dict(
        cls,
        data: dict[str, Any],
        mode: RunMode | str = RunMode.RUN,
    ) -> "RunConfig":
        """Validate `data` and apply defaults.

        Parameters:
            data:
                The parsed configuration.

            mode:
                ``"run"`` for front tracking, ``"exact"`` for the closed
                form only.

        Returns:
            The configuration.

        Raises:
            :class:`ConfigError`: If `data` violates the schema. The
                message starts with the dotted path of the bad field.

        """
        return cls(_validate(data, RunMode(mode)), RunMode(mode))

    def get_mode(self) -> RunMode:
        return self._mode

    def get_params(self) -> GasParams:
        return GasParams(
            pressure_coefficient=self._values["K"],
            gamma=self._values["gamma"],
        )

    def get_resolutions(self) -> tuple[int, ...]:
        """Return the resolutions to run, in increasing order."""
        return tuple(self._values.get("resolutions", ()))

    def get_domain(self) -> tuple[float, float]:
        x_min, x_max = self._values["domain"]
        return float(x_min), float(x_max)

    def get_preset(self) -> dict[str, Any]:
        return copy.deepcopy(self._values.get("preset", {}))

    def get_t_max(self) -> float:
        return float(self._values.get("t_max", math.nan))

    def get_sample_times(self) -> tuple[float, ...]:
        return tuple(self._values["sample_times"])

    def get_outputs(self) -> frozenset[str]:
        return frozenset(self._values["outputs"])

    def is_output_enabled(self, name: str) -> bool:
        return name in self._values["outputs"]

    def get_checks(self) -> dict[str, bool]:
        return dict(self._values["checks"])

    def is_check_enabled(self, name: str) -> bool:
        return bool(self._values["checks"][name])

    def get_K0(self) -> float | None:  # noqa: N802
        return self._values["K0"]

    def get_lifespan_rate(self) -> float:
        return float(self._values["lifespan_rate"])

    def get_exact(self) -> dict[str, Any]:
        return copy.deepcopy(self._values["exact"])

    def get_output_dir(self) -> Path:
        """Return the output directory.

        The environment variable ``POLYTRACK_OUTPUT_DIR`` overrides the
        configured value.

        """
        override = os.environ.get(OUTPUT_DIR_VARIABLE)
        if override:
            return Path(override)
        return Path(self._values["output_dir"])

    def to_dict(self) -> dict[str, Any]:
        return {"mode": str(self._mode), **copy.deepcopy(self._values)}

    def __str__(self) -> str:
        return (
            f"{self.__class__.__name__}(mode={self._mode}, "
            f"resolutions={self.get_resolutions()}, "
            f"preset={self._values.get('preset', {}).get('name')})"
        )

    def __repr__(self) -> str:
        return str(self)


def _fail(path: str, reason: str) -> ConfigError:
    return ConfigError(f"{path}: {reason}")


def _number(data: dict[str, Any], key: str, path: str) -> float:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int | float):
        raise _fail(path, f"expected a number, got {value!r}")
    if not math.isfinite(value):
        raise _fail(path, f"expected a finite number, got {value!r}")
    return float(value)


def _resolution(value: Any, path: str) -> int:  # noqa: ANN401
    if isinstance(value, bool) or not isinstance(value, int):
        raise _fail(path, f"expected an integer, got {value!r}")
    if value < MIN_RESOLUTION:
        raise _fail(path, f"resolution must be at least {MIN_RESOLUTION}")
    return value


def _resolutions(data: dict[str, Any]) -> list[int]:
    if "n" in data and "n_ladder" in data:
        raise _fail("n", "give either n or n_ladder, not both")
    if "n" in data:
        return [_resolution(data["n"], "n")]
    if "n_ladder" not in data:
        raise _fail("n", "missing required field (or n_ladder)")
    ladder = data["n_ladder"]
    if not isinstance(ladder, list) or not ladder:
        raise _fail("n_ladder", "expected a non-empty list of integers")
    resolutions = [
        _resolution(value, f"n_ladder.{position}")
        for position, value in enumerate(ladder)
    ]
    if len(set(resolutions)) != len(resolutions):
        raise _fail("n_ladder", "resolutions must be distinct")
    return sorted(resolutions)


def _selection(
    value: Any,  # noqa: ANN401
    path: str,
    allowed: abc.Sequence[str],
) -> list[str]:
    if not isinstance(value, list):
        raise _fail(path, "expected a list of names")
    for position, name in enumerate(value):
        if name not in allowed:
            raise _fail(
                f"{path}.{position}",
                f"unknown name {name!r}, choose from {', '.join(allowed)}",
            )
    return [name for name in allowed if name in value]


def _checks(value: Any) -> dict[str, bool]:  # noqa: ANN401
    if not isinstance(value, dict):
        raise _fail("checks", "expected a mapping of checker toggles")
    checks = dict.fromkeys(CHECKS, True)
    for name, enabled in value.items():
        if name not in CHECKS:
            raise _fail(f"checks.{name}", "unknown checker")
        if not isinstance(enabled, bool):
            raise _fail(f"checks.{name}", "expected true or false")
        checks[name] = enabled
    return checks


def _exact(value: Any) -> dict[str, Any]:  # noqa: ANN401
    if not isinstance(value, dict):
        raise _fail("exact", "expected a mapping")
    exact = {**DEFAULTS["exact"], **value}
    unknown = set(exact) - set(DEFAULTS["exact"])
    if unknown:
        raise _fail(f"exact.{sorted(unknown)[0]}", "unknown field")
    for key in ("t_bar", "S_bar"):
        if _number(exact, key, f"exact.{key}") <= 0:
            raise _fail(f"exact.{key}", "must be positive")
    samples = exact["samples"]
    if samples is not None:
        if not isinstance(samples, list) or not samples:
            raise _fail("exact.samples", "expected a non-empty list")
        for position, sample in enumerate(samples):
            path = f"exact.samples.{position}"
            if isinstance(sample, bool) or not isinstance(
                sample, int | float
            ):
                raise _fail(path, "expected a number")
            if not 0 < sample <= exact["S_bar"]:
                raise _fail(path, "samples must lie in (0, S_bar]")
    return exact


def _validate(  # noqa: C901, PLR0912
    data: Any,  # noqa: ANN401
    mode: RunMode,
) -> dict[str, Any]:
    if not isinstance(data, dict):
        msg = "<root>: expected a JSON object"
        raise ConfigError(msg)
    known = {"K", "gamma", "n", "n_ladder", "preset", "t_max", *DEFAULTS}
    for key in data:
        if key not in known:
            raise _fail(key, "unknown field")

    values = copy.deepcopy(DEFAULTS)
    for key in ("K", "gamma"):
        if key not in data:
            raise _fail(key, "missing required field")
        values[key] = _number(data, key, key)
    if values["K"] <= 0:
        raise _fail("K", "must be positive")
    try:
        params = GasParams(values["K"], values["gamma"])
    except GasParamsError as error:
        raise _fail("gamma", str(error)) from error

    if mode is RunMode.RUN:
        if values["gamma"] >= 3:  # noqa: PLR2004
            raise _fail(
                "gamma",
                "front tracking requires 1 < gamma < 3, the hypothesis "
                "of the density bound; use the exact mode for gamma >= 3",
            )
        values["resolutions"] = _resolutions(data)
        if "preset" not in data:
            raise _fail("preset", "missing required field")
        values["preset"] = validate_preset(data["preset"], "preset")
        if "t_max" not in data:
            raise _fail("t_max", "missing required field")
        values["t_max"] = _number(data, "t_max", "t_max")
        if values["t_max"] <= 0:
            raise _fail("t_max", "must be positive")

    if "domain" in data:
        domain = data["domain"]
        if not isinstance(domain, list) or len(domain) != 2:  # noqa: PLR2004
            raise _fail("domain", "expected [x_min, x_max]")
        values["domain"] = [
            _number({"x": bound}, "x", f"domain.{position}")
            for position, bound in enumerate(domain)
        ]
    if not values["domain"][0] < values["domain"][1]:
        raise _fail("domain", "need x_min < x_max")

    if "sample_times" in data:
        times = data["sample_times"]
        if not isinstance(times, list):
            raise _fail("sample_times", "expected a list of times")
        values["sample_times"] = sorted(
            _number({"t": time}, "t", f"sample_times.{position}")
            for position, time in enumerate(times)
        )
        if values["sample_times"] and values["sample_times"][0] < 0:
            raise _fail("sample_times", "times must not be negative")
    if "outputs" in data:
        values["outputs"] = _selection(data["outputs"], "outputs", OUTPUTS)
    if "checks" in data:
        values["checks"] = _checks(data["checks"])
    if data.get("K0") is not None:
        values["K0"] = _number(data, "K0", "K0")
        if values["K0"] <= 0:
            raise _fail("K0", "must be positive")
    if "lifespan_rate" in data:
        values["lifespan_rate"] = _number(
            data, "lifespan_rate", "lifespan_rate"
        )
        if values["lifespan_rate"] <= 0:
            raise _fail("lifespan_rate", "must be positive")
    if "exact" in data:
        values["exact"] = _exact(data["exact"])
    if "output_dir" in data:
        if not isinstance(data["output_dir"], str) or not data["output_dir"]:
            raise _fail("output_dir", "expected a directory name")
        values["output_dir"] = data["output_dir"]

    msg = f"validated {mode} configuration for {params}"
    logger.debug(msg)
    return values


def load_config(
    path: Path | str,
    mode: RunMode | str = RunMode.RUN,
) -> RunConfig:
    """Load and validate a JSON run configuration.

    Optional keys take their values from :data:`DEFAULTS`.

    Parameters:
        path:
            The configuration file.

        mode:
            ``"run"`` for front tracking, which needs a resolution, a
            preset and ``t_max``; ``"exact"`` for the closed form only,
            which also admits ``gamma >= 3``.

    Returns:
        The configuration.

    Raises:
        :class:`ConfigError`: If the file does not parse or violates the
            schema.

        :class:`OSError`: If the file cannot be read.

    Examples:
        .. code-block:: python

            import polytrack

            config = polytrack.load_config("two_rarefactions.json")
            config.get_resolutions()
            config.get_output_dir()

    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        msg = f"<root>: {path} is not valid JSON ({error})"
        raise ConfigError(msg) from error
    config = RunConfig.init_from_dict(data, mode)
    msg = f"loaded {config} from {path}"
    logger.info(msg)
    return config

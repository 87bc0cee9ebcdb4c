from collections import abc
from typing import Any

from polytrack._internal.types import CheckOutcome


class DensityBoundResults:
    """Results class containing the volume bound report."""

    def __init__(self, generator: abc.Iterable) -> None:
        self._values = next(generator)  # type: ignore[call-overload]

    def get_max_v0(self) -> float:
        return self._values["max_v0"]

    def get_a0(self) -> float:
        return self._values["a0"]

    def get_resolution(self) -> int:
        return self._values["n"]

    def get_L_measured(self) -> float:  # noqa: N802
        return self._values["L_measured"]

    def get_D_max(self) -> int:  # noqa: N802
        return self._values["D_max"]

    def is_bound_ok(self) -> bool | None:
        """Return ``None`` when the bound does not apply."""
        return self._values["bound_ok"]

    def get_outcome(self) -> CheckOutcome:
        return self._values["outcome"]

    def get_tracing_outcome(self) -> CheckOutcome:
        return self._values["tracing"]

    def to_dict(self) -> dict[str, Any]:
        """Return the JSON report."""
        return {
            "max_v0": self._values["max_v0"],
            "a0": self._values["a0"],
            "n": self._values["n"],
            "L_measured": self._values["L_measured"],
            "D_max": self._values["D_max"],
            "bound_ok": self._values["bound_ok"],
            "tracing_ok": {
                CheckOutcome.PASS: True,
                CheckOutcome.FAIL: False,
            }.get(self._values["tracing"]),
        }

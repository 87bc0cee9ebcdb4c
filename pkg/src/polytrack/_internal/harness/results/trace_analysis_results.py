from collections import abc
from typing import Any

from polytrack._internal.character.districts import District
from polytrack._internal.functional.density_functional import (
    FunctionalSample,
)
from polytrack._internal.functional.results.density_bound_results import (
    DensityBoundResults,
)
from polytrack._internal.tracking.blocks import BlockStructure
from polytrack._internal.tracking.trace import Trace
from polytrack._internal.types import CheckOutcome, StopReason


class TraceAnalysisResults:
    """Results class containing the checker outcomes of one run."""

    def __init__(self, generator: abc.Iterable) -> None:
        self._values = next(generator)  # type: ignore[call-overload]

    def get_trace(self) -> Trace:
        return self._values["trace"]

    def get_structure(self) -> BlockStructure:
        return self._values["structure"]

    def get_check_outcomes(self) -> dict[str, CheckOutcome | None]:
        """Return each checker's outcome, ``None`` when disabled."""
        return dict(self._values["outcomes"])

    def get_lowest_pairing(self) -> CheckOutcome:
        return self._values["lowest_pairing"]

    def get_samples(self) -> list[FunctionalSample]:
        return list(self._values["samples"])

    def get_districts(self) -> list[tuple[District, CheckOutcome | None]]:
        """Return every district with its decay outcome."""
        return list(self._values["districts"])

    def get_density_results(self) -> DensityBoundResults | None:
        """Return the bound report, ``None`` for runs stopped at ``t = 0``."""
        return self._values["density"]

    def get_min_density(self) -> list[tuple[float, float]]:
        """Return ``(t, min rho)`` at every sample time."""
        return list(self._values["decay"])

    def has_failures(self) -> bool:
        return CheckOutcome.FAIL in self._values["outcomes"].values()

    def is_collision(self) -> bool:
        return (
            self._values["trace"].get_stop_reason()
            is StopReason.SAME_FAMILY_COLLISION
        )

    def to_dict(self) -> dict[str, Any]:
        """Return the JSON summary of the run."""
        trace = self._values["trace"]
        return {
            "n": trace.get_resolution(),
            "stop_reason": str(trace.get_stop_reason()),
            "t_end": trace.get_t_end(),
            "collision_time": trace.get_collision_time(),
            "fronts": len(trace.get_fronts()),
            "segments": sum(1 for _ in trace.get_segments()),
            "interactions": len(trace.get_interactions()),
            "checks": {
                name: None if outcome is None else str(outcome)
                for name, outcome in self._values["outcomes"].items()
            },
            "lowest_pairing": str(self._values["lowest_pairing"]),
        }

import logging
import math
from collections import abc
from dataclasses import dataclass
from typing import Any

from polytrack._internal.character.edge_character import (
    EdgeCharacter,
    classify_edges,
)
from polytrack._internal.functional.complete_diamonds import (
    CompleteDiamond,
    find_complete_diamonds,
)
from polytrack._internal.tracking.blocks import BlockStructure, extract_blocks
from polytrack._internal.tracking.trace import Trace
from polytrack._internal.types import Character, CheckOutcome, EdgeRef
from polytrack._internal.utilities.exceptions import ReferenceTimeError

logger = logging.getLogger(__name__)

LEVEL_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True)
class CompleteDiamondSet:
    """The complete diamonds selected at a reference time.

    Attributes:
        reference_time:
            The time ``T``.

        diamonds:
            Block ids of the selected diamonds.

        lower_boundary:
            South edges of selected diamonds with no selected diamond
            below them. Empty when nothing is selected.

    """

    reference_time: float
    diamonds: tuple[int, ...]
    lower_boundary: tuple[EdgeRef, ...]

    def is_empty(self) -> bool:
        return not self.diamonds


@dataclass(frozen=True, slots=True)
class FunctionalSample:
    """The value ``a(T)``; infinite when no ``R_r`` edge is on the boundary."""

    T: float  # noqa: N815
    a: float
    argmin_edge: EdgeRef | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "T": self.T,
            "a": self.a,
            "argmin_edge": (
                None if self.argmin_edge is None else list(self.argmin_edge)
            ),
        }


class DensityFunctional:
    """The shortest rarefactive propagation length on a lower boundary.

    Blocks of the trace are completed to diamonds once. At a reference
    time ``T`` the diamonds whose south corner lies at or above ``T``
    are selected, and ``a(T)`` is the shortest x-projection of an
    ``R_r`` edge on the lower boundary of the selection.

    Parameters:
        trace:
            The completed run.

        structure:
            Its blocks, extracted when omitted.

        characters:
            Edge characters, computed when omitted.

    Examples:
        .. code-block:: python

            import polytrack

            # trace from polytrack.FrontTracker(...).run(...)
            functional = polytrack.DensityFunctional(trace)
            functional.sample(0.0).a
            samples = functional.samples(functional.get_sample_times())
            functional.check_monotone(samples)

    """

    def __init__(
        self,
        trace: Trace,
        structure: BlockStructure | None = None,
        characters: dict[EdgeRef, EdgeCharacter] | None = None,
    ) -> None:
        if structure is None:
            structure = extract_blocks(trace)
        if characters is None:
            characters = classify_edges(trace)
        self._trace = trace
        self._structure = structure
        self._characters = characters
        self._diamonds = find_complete_diamonds(
            trace, structure, characters
        )

    def get_diamonds(self) -> dict[int, CompleteDiamond]:
        return dict(self._diamonds)

    def get_sample_times(
        self,
        requested: abc.Iterable[float] = (),
    ) -> list[float]:
        """Return ``0``, every event time and `requested`, within the run."""
        t_end = self._trace.get_t_end()
        times = {0.0}
        times.update(
            event.time
            for event in self._trace.get_interactions()
            if event.time < t_end
        )
        times.update(time for time in requested if 0 <= time < t_end)
        return sorted(times)

    def _check_time(self, reference_time: float) -> None:
        if not 0 <= reference_time < self._trace.get_t_end():
            msg = (
                f"reference time {reference_time} outside "
                f"[0, {self._trace.get_t_end()})"
            )
            raise ReferenceTimeError(msg)

    def complete_diamonds(self, reference_time: float) -> CompleteDiamondSet:
        """Select the diamonds at `reference_time`.

        Parameters:
            reference_time:
                The time ``T`` in ``[0, t_end)``.

        Returns:
            The selection and its lower boundary.

        Raises:
            :class:`ReferenceTimeError`: If `reference_time` lies outside
                the run.

        """
        self._check_time(reference_time)
        selected = {
            block_id
            for block_id, diamond in self._diamonds.items()
            if diamond.get_level() >= reference_time - LEVEL_TOLERANCE
        }
        boundary = []
        for block_id in sorted(selected):
            diamond = self._diamonds[block_id]
            for edge in diamond.get_south_edges():
                left, right = self._structure.get_edge_sides(edge)
                below = left if edge == diamond.sw else right
                if below not in selected:
                    boundary.append(edge)
        return CompleteDiamondSet(
            reference_time=reference_time,
            diamonds=tuple(sorted(selected)),
            lower_boundary=tuple(boundary),
        )

    def sample(self, reference_time: float) -> FunctionalSample:
        """Evaluate ``a(T)`` at `reference_time`."""
        selection = self.complete_diamonds(reference_time)
        best = math.inf
        argmin = None
        for block_id in selection.diamonds:
            diamond = self._diamonds[block_id]
            for edge in diamond.get_south_edges():
                if edge not in selection.lower_boundary:
                    continue
                if self._characters[edge].character is not Character.R_R:
                    continue
                length = diamond.south_projection(edge)
                if length < best:
                    best, argmin = length, edge
        return FunctionalSample(T=reference_time, a=best, argmin_edge=argmin)

    def samples(
        self,
        reference_times: abc.Iterable[float],
    ) -> list[FunctionalSample]:
        return [self.sample(time) for time in reference_times]

    def check_monotone(
        self,
        samples: abc.Sequence[FunctionalSample],
        tolerance: float = 1e-9,
    ) -> CheckOutcome:
        """Check that ``a(T)`` does not decrease.

        Runs of any character are checked. Without a finite sample, as
        for purely compressive data, the result is
        :attr:`CheckOutcome.NOT_APPLICABLE`.

        """
        if not any(math.isfinite(sample.a) for sample in samples):
            return CheckOutcome.NOT_APPLICABLE
        ordered = sorted(samples, key=lambda sample: sample.T)
        for earlier, later in zip(ordered, ordered[1:], strict=False):
            if later.a < earlier.a - tolerance:
                msg = (
                    f"a(T) decreases from {earlier.a} at T = {earlier.T} "
                    f"to {later.a} at T = {later.T}"
                )
                logger.warning(msg)
                return CheckOutcome.FAIL
        return CheckOutcome.PASS

    def check_lowest_pairing(self, reference_time: float) -> CheckOutcome:
        """Check the lowest selected diamonds sit on the lower boundary.

        Among the selected diamonds with two south edges, those at the
        lowest level must have both south edges on the lower boundary.

        """
        selection = self.complete_diamonds(reference_time)
        paired = [
            diamond
            for diamond in map(self._diamonds.get, selection.diamonds)
            if diamond is not None and diamond.sw and diamond.se
        ]
        if not paired:
            return CheckOutcome.NOT_APPLICABLE
        lowest = min(diamond.get_level() for diamond in paired)
        for diamond in paired:
            if diamond.get_level() > lowest + LEVEL_TOLERANCE:
                continue
            if not all(
                edge in selection.lower_boundary
                for edge in diamond.get_south_edges()
            ):
                msg = (
                    f"lowest diamond {diamond.block_id} at T = "
                    f"{reference_time} has a south edge off the boundary"
                )
                logger.warning(msg)
                return CheckOutcome.FAIL
        return CheckOutcome.PASS


def complete_diamonds(
    trace: Trace,
    reference_time: float,
) -> CompleteDiamondSet:
    """Select the complete diamonds of `trace` at `reference_time`."""
    return DensityFunctional(trace).complete_diamonds(reference_time)


def a_of_t(trace: Trace, reference_time: float) -> FunctionalSample:
    """Evaluate ``a(T)`` for `trace` at `reference_time`."""
    return DensityFunctional(trace).sample(reference_time)

import logging
import math
from dataclasses import dataclass

from polytrack._internal.tracking.front.segment import Segment
from polytrack._internal.tracking.trace import Trace
from polytrack._internal.types import (
    Character,
    CheckOutcome,
    EdgeRef,
    Family,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class EdgeCharacter:
    """The character of a jump edge together with its family."""

    family: Family
    character: Character

    def get_main(self) -> str:
        """Return ``"R"`` or ``"C"``."""
        return self.character.value[0]

    def get_sub(self) -> str:
        """Return ``"r"`` or ``"c"``."""
        return self.character.value[-1]

    def __str__(self) -> str:
        return f"{self.family} {self.character}"


def _midpoint(segment: Segment) -> float:
    if math.isinf(segment.t1):
        return segment.t0
    return (segment.t0 + segment.t1) / 2


def classify_edge(trace: Trace, edge: EdgeRef) -> EdgeCharacter:
    """Classify a jump edge by comparing velocity indices.

    For a backward edge the three states are the one left of the edge,
    the one right of it and the one beyond the next backward front to
    the right. For a forward edge they are the one beyond the next
    forward front to the left, then the states left and right of the
    edge. The sub character is read from the neighbour segment alive
    at the middle of the edge. Ties count as rarefactive. Without a
    same-family neighbour the edge is outermost and is either ``R_r``
    or ``C_c``.

    Parameters:
        trace:
            The completed run.

        edge:
            ``(front id, segment index)`` of the edge.

    Returns:
        The character.

    Examples:
        .. code-block:: python

            import polytrack

            # trace from polytrack.FrontTracker(...).run(...)
            character = polytrack.analysis.classify_edge(trace, (0, 0))
            character.character  # Character.R_R

    """
    segment = trace.get_segment(edge)
    i_left = segment.left_state.get_i()
    i_right = segment.right_state.get_i()
    main_rarefactive = i_left <= i_right
    neighbour = trace.get_family_neighbour(segment.front_id)

    if neighbour is None:
        sub_rarefactive = main_rarefactive
    else:
        ahead = trace.get_front(neighbour).get_segment_at(_midpoint(segment))
        # backward: u_+ <= u_++; forward: u_-- <= u_-
        sub_rarefactive = (
            ahead.left_state.get_i() <= ahead.right_state.get_i()
        )

    return EdgeCharacter(
        family=segment.family,
        character=Character.from_parts(
            main_rarefactive=main_rarefactive,
            sub_rarefactive=sub_rarefactive,
        ),
    )


def classify_edges(trace: Trace) -> dict[EdgeRef, EdgeCharacter]:
    """Classify every edge of `trace`."""
    return {
        segment.get_edge(): classify_edge(trace, segment.get_edge())
        for segment in trace.get_segments()
    }


def check_character_constancy(trace: Trace) -> CheckOutcome:
    """Check that each front keeps one character along its trajectory."""
    outcome = CheckOutcome.PASS
    for front in trace.get_fronts():
        characters = {
            classify_edge(trace, segment.get_edge()).character
            for segment in front.get_segments()
        }
        if len(characters) > 1:
            msg = (
                f"front {front.get_id()} changes character: "
                f"{sorted(characters)}"
            )
            logger.warning(msg)
            outcome = CheckOutcome.FAIL
    return outcome


def check_volume_ordering(trace: Trace) -> CheckOutcome:
    """Check the volume jump across every edge against its character.

    Rarefactive edges have a larger volume behind than ahead, and
    compressive edges a smaller one. Compared on volume indices.

    """
    outcome = CheckOutcome.PASS
    for segment in trace.get_segments():
        character = classify_edge(trace, segment.get_edge()).character
        j_behind = segment.get_behind_state().get_j()
        j_ahead = segment.get_ahead_state().get_j()
        expected = (
            j_behind > j_ahead
            if character.is_main_rarefactive()
            else j_behind < j_ahead
        )
        if not expected:
            msg = (
                f"edge {segment.get_edge()} of character {character} has "
                f"j_behind = {j_behind}, j_ahead = {j_ahead}"
            )
            logger.warning(msg)
            outcome = CheckOutcome.FAIL
    return outcome

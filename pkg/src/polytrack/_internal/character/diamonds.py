import logging
from dataclasses import dataclass

from polytrack._internal.character.edge_character import (
    EdgeCharacter,
    classify_edge,
)
from polytrack._internal.grid.standard_state import StandardState
from polytrack._internal.tracking.front.front import Front
from polytrack._internal.tracking.trace import Trace
from polytrack._internal.types import CheckOutcome, EdgeRef

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class InteractionDiamond:
    """The four sectors and four edges around an interaction point.

    The south sector is the state between the incoming fronts, the north
    sector the state between the outgoing fronts. The forward front
    enters along ``sw`` and leaves along ``ne``; the backward front
    enters along ``se`` and leaves along ``nw``.

    """

    time: float
    x: float
    south: StandardState
    west: StandardState
    east: StandardState
    north: StandardState
    sw: EdgeRef
    nw: EdgeRef
    se: EdgeRef
    ne: EdgeRef
    sw_character: EdgeCharacter
    nw_character: EdgeCharacter
    se_character: EdgeCharacter
    ne_character: EdgeCharacter


def _turn_index(front: Front, time: float) -> int:
    for segment in front.get_segments()[1:]:
        if segment.t0 == time:
            return segment.index
    msg = f"front {front.get_id()} has no turn at t = {time}"
    raise ValueError(msg)


def interaction_diamonds(trace: Trace) -> list[InteractionDiamond]:
    """Return the diamond of every interaction in `trace`."""
    diamonds = []
    for event in trace.get_interactions():
        forward_id, backward_id = event.participants
        forward_index = _turn_index(trace.get_front(forward_id), event.time)
        backward_index = _turn_index(
            trace.get_front(backward_id), event.time
        )
        sw = (forward_id, forward_index - 1)
        ne = (forward_id, forward_index)
        se = (backward_id, backward_index - 1)
        nw = (backward_id, backward_index)
        incoming_forward = trace.get_segment(sw)
        incoming_backward = trace.get_segment(se)
        diamonds.append(
            InteractionDiamond(
                time=event.time,
                x=event.x,
                south=incoming_forward.right_state,
                west=incoming_forward.left_state,
                east=incoming_backward.right_state,
                north=trace.get_segment(nw).right_state,
                sw=sw,
                nw=nw,
                se=se,
                ne=ne,
                sw_character=classify_edge(trace, sw),
                nw_character=classify_edge(trace, nw),
                se_character=classify_edge(trace, se),
                ne_character=classify_edge(trace, ne),
            )
        )
    return diamonds


def check_diamond_preservation(diamond: InteractionDiamond) -> CheckOutcome:
    """Check that an interaction preserves the wave characters.

    Passes when the velocity differences across opposite sides of the
    diamond agree and both fronts keep their characters through the
    crossing.

    Parameters:
        diamond:
            The diamond to check.

    Returns:
        :attr:`CheckOutcome.PASS` or :attr:`CheckOutcome.FAIL`.

    """
    i_south = diamond.south.get_i()
    i_west = diamond.west.get_i()
    i_east = diamond.east.get_i()
    i_north = diamond.north.get_i()
    identities = (
        i_south - i_east == i_west - i_north
        and i_south - i_west == i_east - i_north
    )
    characters = (
        diamond.sw_character.character == diamond.ne_character.character
        and diamond.se_character.character == diamond.nw_character.character
    )
    if identities and characters:
        return CheckOutcome.PASS
    msg = (
        f"diamond at (x, t) = ({diamond.x}, {diamond.time}) breaks "
        f"preservation: identities={identities}, characters={characters}"
    )
    logger.warning(msg)
    return CheckOutcome.FAIL
